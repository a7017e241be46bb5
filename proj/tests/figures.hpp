#pragma once

// Colored Hasse diagrams transcribed from the published figures. Tableaux
// are written row by row ("/" between rows), barred letters as negatives.

#include <map>
#include <string>
#include <vector>

#include "crystalmorse/crystal.hpp"
#include "crystalmorse/poset.hpp"

namespace figures {

struct FigEdge {
  std::string from;
  std::string to;
  int color;
};

struct Figure {
  std::vector<std::pair<std::string, std::string>> nodes;  // name, tableau
  std::vector<FigEdge> edges;
  std::string bottom;
  std::string top;
};

// A4, lambda = (3,1,0,0).
inline Figure figure1() {
  return {{{"a", "2,2,4/3"}, {"b", "2,2,4/4"}, {"c", "2,2,5/3"}, {"d", "2,3,4/3"},
           {"e", "2,3,4/4"}, {"f", "2,2,5/4"}, {"g", "2,3,5/3"}, {"h", "2,4,4/3"},
           {"i", "2,3,5/4"}, {"j", "3,3,4/4"}, {"k", "2,4,4/4"}, {"l", "2,4,5/3"},
           {"m", "3,3,5/4"}, {"n", "3,4,4/4"}, {"o", "2,4,5/4"}, {"p", "3,4,5/4"}},
          {{"a", "b", 3}, {"a", "c", 4}, {"a", "d", 2}, {"b", "e", 2}, {"b", "f", 4},
           {"c", "f", 3}, {"c", "g", 2}, {"d", "g", 4}, {"d", "h", 3}, {"e", "i", 4},
           {"e", "j", 2}, {"f", "i", 2}, {"g", "l", 3}, {"h", "k", 3}, {"h", "l", 4},
           {"i", "m", 2}, {"j", "m", 4}, {"j", "n", 3}, {"k", "n", 2}, {"k", "o", 4},
           {"l", "o", 3}, {"m", "p", 3}, {"n", "p", 4}, {"o", "p", 2}},
          "a",
          "p"};
}

// D3, lambda = (2,1,1).
inline Figure figure10() {
  return {{{"a", "1,2/-3/3"}, {"b", "2,2/-3/3"}, {"c", "1,3/-3/3"}, {"d", "1,2/-3/-2"},
           {"e", "2,3/-3/3"}, {"f", "2,-3/-3/3"}, {"g", "1,3/-3/-2"}, {"h", "2,2/-3/-2"},
           {"i", "2,-2/-3/3"}, {"k", "2,-3/-3/-2"}, {"l", "2,3/-3/-2"}, {"m", "2,2/-3/-1"},
           {"n", "2,-2/-3/-2"}, {"o", "2,-3/-3/-1"}, {"p", "2,3/-3/-1"}, {"q", "2,-2/-3/-1"}},
          {{"a", "b", 1}, {"a", "c", 2}, {"a", "d", 3}, {"b", "e", 2}, {"b", "f", 3},
           {"c", "e", 1}, {"c", "g", 3}, {"d", "g", 2}, {"d", "h", 1}, {"e", "i", 3},
           {"f", "i", 2}, {"f", "k", 3}, {"g", "l", 1}, {"h", "l", 2}, {"h", "m", 1},
           {"i", "n", 3}, {"k", "n", 2}, {"k", "o", 1}, {"l", "p", 1}, {"m", "o", 3},
           {"m", "p", 2}, {"n", "q", 1}, {"o", "q", 2}, {"p", "q", 3}},
          "a",
          "q"};
}

// C3, lambda = (4,3,1). The printed top tableau does not occur in the
// crystal (it has the wrong weight); tests use only its position.
inline Figure figure11() {
  return {{{"a", "1,1,2,3/3,3,-3/-3"}, {"b", "1,1,2,3/3,3,-3/-2"}, {"c", "1,2,2,3/3,3,-3/-3"},
           {"d", "1,1,2,3/3,-3,-3/-2"}, {"e", "1,2,2,3/3,3,-3/-2"}, {"f", "1,2,3,3/3,3,-3/-3"},
           {"g", "1,1,3,3/3,-3,-3/-2"}, {"h", "1,2,2,3/3,-3,-3/-2"}, {"i", "1,2,3,-3/3,3,-3/-3"},
           {"k", "1,2,3,3/3,3,-3/-2"}, {"l", "1,2,3,3/3,-3,-3/-2"}, {"m", "1,2,3,-3/3,3,-3/-2"},
           {"n", "1,2,3,3/3,-3,-2/-2"}, {"o", "1,2,3,-3/3,-3,-3/-2"}, {"p", "1,3,3,-3/-3,-3,-1/-2"}},
          {{"a", "b", 2}, {"a", "c", 1}, {"b", "d", 3}, {"b", "e", 1}, {"c", "f", 2},
           {"d", "g", 2}, {"d", "h", 1}, {"e", "h", 3}, {"f", "i", 3}, {"f", "k", 2},
           {"g", "l", 1}, {"h", "l", 2}, {"i", "m", 2}, {"k", "m", 3}, {"l", "n", 2},
           {"m", "o", 3}, {"n", "p", 3}, {"o", "p", 2}},
          "a",
          "p"};
}

/// Edge list over indices 0..n-1 (node order of the figure).
inline std::vector<crystalmorse::Edge> figure_edges(const Figure& f) {
  std::map<std::string, crystalmorse::VertexId> index;
  for (std::size_t k = 0; k < f.nodes.size(); ++k)
    index[f.nodes[k].first] = static_cast<crystalmorse::VertexId>(k);
  std::vector<crystalmorse::Edge> out;
  for (const auto& e : f.edges) out.push_back({index.at(e.from), index.at(e.to), e.color});
  return out;
}

inline std::string tableau_of(const Figure& f, const std::string& name) {
  for (const auto& [n, t] : f.nodes)
    if (n == name) return t;
  return {};
}

inline crystalmorse::Word word_of(const Figure& f, const std::string& name) {
  return crystalmorse::word_from_tableau(crystalmorse::parse_tableau(tableau_of(f, name)));
}

/// Relabels interval edges to 0..size-1 for isomorphism checks.
inline std::vector<crystalmorse::Edge> local_edges(const crystalmorse::Interval& iv) {
  std::vector<crystalmorse::Edge> out;
  for (const auto& e : iv.edges()) out.push_back({*iv.local(e.from), *iv.local(e.to), e.color});
  return out;
}

}  // namespace figures
