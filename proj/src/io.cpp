#include "pamona/io.hpp"

#include <fstream>
#include <sstream>

namespace pamona {

namespace {

struct LineReader {
  std::istream& in;
  int lineno = 0;
  bool next(std::string& out) {
    if (!std::getline(in, out)) {
      return false;
    }
    ++lineno;
    if (!out.empty() && out.back() == '\r') {
      out.pop_back();
    }
    return true;
  }
};

std::vector<std::string> split_ws(std::string const& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    out.push_back(tok);
  }
  return out;
}

int parse_int(std::string const& tok, int lineno, int col) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) {
      throw std::invalid_argument(tok);
    }
    return v;
  } catch (std::exception const&) {
    throw ParseError(lineno, col, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

Semigroup parse_semigroup(std::istream& in) {
  LineReader rd{in};
  std::string line;
  if (!rd.next(line)) {
    throw ParseError(1, 1, "empty input");
  }
  auto head = split_ws(line);
  if (head.size() != 3 || head[0] != "semigroup" || head[1] != "v1") {
    throw ParseError(rd.lineno, 1, "expected header 'semigroup v1 <order>'");
  }
  int order = parse_int(head[2], rd.lineno, 3);
  if (order <= 0) {
    throw ParseError(rd.lineno, 3, "order must be positive");
  }

  if (!rd.next(line)) {
    throw ParseError(rd.lineno + 1, 1, "unexpected end of input");
  }
  std::vector<std::string> labels;
  auto toks = split_ws(line);
  if (!toks.empty() && toks[0] == "labels") {
    if (int(toks.size()) != order + 1) {
      throw ParseError(rd.lineno, 2,
                       "expected " + std::to_string(order) + " labels, got "
                           + std::to_string(toks.size() - 1));
    }
    labels.assign(toks.begin() + 1, toks.end());
    if (!rd.next(line)) {
      throw ParseError(rd.lineno + 1, 1, "unexpected end of input");
    }
    toks = split_ws(line);
  }

  std::vector<int32_t> table;
  table.reserve(size_t(order) * order);
  for (int row = 0; row < order; ++row) {
    if (row > 0) {
      if (!rd.next(line)) {
        throw ParseError(rd.lineno + 1, 1, "unexpected end of input");
      }
      toks = split_ws(line);
    }
    if (int(toks.size()) != order) {
      throw ParseError(rd.lineno, 1,
                       "expected " + std::to_string(order)
                           + " entries in row, got "
                           + std::to_string(toks.size()));
    }
    for (int col = 0; col < order; ++col) {
      table.push_back(int32_t(parse_int(toks[col], rd.lineno, col + 1)));
    }
  }
  // semantic errors (range, associativity) are validate()'s business
  return Semigroup::validate_flat(order, std::move(table), std::move(labels));
}

Semigroup parse_semigroup_string(std::string const& text) {
  std::istringstream ss(text);
  return parse_semigroup(ss);
}

Semigroup parse_semigroup_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  return parse_semigroup(in);
}

std::string emit_semigroup(Semigroup const& s) {
  std::ostringstream out;
  out << "semigroup v1 " << s.order() << "\n";
  if (s.has_labels()) {
    out << "labels";
    for (int i = 0; i < s.order(); ++i) {
      out << " " << s.label(i);
    }
    out << "\n";
  }
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      out << (j ? " " : "") << s.product(i, j);
    }
    out << "\n";
  }
  return out.str();
}

void emit_semigroup_file(Semigroup const& s, std::string const& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open '" + path + "' for writing");
  }
  out << emit_semigroup(s);
}

std::string emit_dot_order(std::vector<std::string> const& node_names,
                           std::vector<std::vector<bool>> const& leq,
                           std::string const& graph_name) {
  int n = int(node_names.size());
  auto strictly_below = [&](int a, int b) { return a != b && leq[a][b]; };
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  out << "  rankdir=BT;\n";
  for (int i = 0; i < n; ++i) {
    out << "  n" << i << " [label=\"" << node_names[i] << "\"];\n";
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!strictly_below(a, b)) {
        continue;
      }
      bool cover = true;
      for (int m = 0; m < n && cover; ++m) {
        cover = !(strictly_below(a, m) && strictly_below(m, b));
      }
      if (cover) {
        out << "  n" << a << " -> n" << b << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pamona
