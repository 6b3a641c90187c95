#ifndef PAMONA_IO_HPP_
#define PAMONA_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "pamona/semigroup.hpp"

namespace pamona {

// Interchange format (text):
//   semigroup v1 <order>
//   labels <name> ... <name>        (optional, one name per element)
//   <order> rows of <order> space-separated indices; row i = products i*j
// Emission is canonical; parse(emit(s)) reproduces s exactly.

Semigroup parse_semigroup(std::istream& in);
Semigroup parse_semigroup_string(std::string const& text);
Semigroup parse_semigroup_file(std::string const& path);

std::string emit_semigroup(Semigroup const& s);
void emit_semigroup_file(Semigroup const& s, std::string const& path);

// Hasse diagram of a partial order as DOT, edges = covers, drawn upward.
// Node order and edge order are deterministic.
std::string emit_dot_order(std::vector<std::string> const& node_names,
                           std::vector<std::vector<bool>> const& leq,
                           std::string const& graph_name);

}  // namespace pamona

#endif  // PAMONA_IO_HPP_
