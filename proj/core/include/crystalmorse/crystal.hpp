#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "crystalmorse/root_system.hpp"

namespace crystalmorse {

/// Letters of the vector-representation crystal. Positive k is the letter k,
/// negative k is the barred letter, and 0 is the extra letter of type B.
using Letter = int;
using Word = std::vector<Letter>;
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = 0xffffffffu;
inline constexpr std::size_t kDefaultVertexCap = 5'000'000;

/// Single-letter crystal of the vector representation.
class LetterCrystal {
 public:
  explicit LetterCrystal(const CartanType& t);

  const CartanType& cartan() const { return cartan_; }
  /// Letters in alphabet order (1 < 2 < ... < n < 0 < nbar < ... < 1bar).
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  bool contains(Letter l) const;

  std::optional<Letter> f(Letter l, Color i) const;
  std::optional<Letter> e(Letter l, Color i) const;
  int phi(Letter l, Color i) const { return phi_[slot(l) * n_ + (i - 1)]; }
  int epsilon(Letter l, Color i) const { return eps_[slot(l) * n_ + (i - 1)]; }
  Weight weight(Letter l) const;

 private:
  std::size_t slot(Letter l) const { return static_cast<std::size_t>(l + offset_); }

  CartanType cartan_;
  int n_;
  int offset_;
  std::vector<Letter> alphabet_;
  std::vector<Letter> f_table_;  // by slot and color; 0x7f marks undefined
  std::vector<Letter> e_table_;
  std::vector<int> phi_;
  std::vector<int> eps_;
  std::vector<char> valid_;
};

struct StringStatistics {
  std::vector<int> phi;      // f-steps available per color
  std::vector<int> epsilon;  // e-steps available per color
};

/// Tensor-word crystal: operators act by the signature rule.
class WordCrystal {
 public:
  explicit WordCrystal(const CartanType& t) : letters_(t) {}

  const CartanType& cartan() const { return letters_.cartan(); }
  const LetterCrystal& letters() const { return letters_; }

  std::optional<Word> apply_f(const Word& w, Color i) const;
  std::optional<Word> apply_e(const Word& w, Color i) const;
  /// Position of the letter f_i (resp. e_i) would change, or -1.
  int f_position(const Word& w, Color i) const;
  int e_position(const Word& w, Color i) const;
  Weight weight(const Word& w) const;
  /// Bracket counts: unmatched + and - in the reduced signature.
  StringStatistics signature_stats(const Word& w) const;

 private:
  LetterCrystal letters_;
};

std::optional<Word> apply_f(const Word& w, Color i, const CartanType& t);
std::optional<Word> apply_e(const Word& w, Color i, const CartanType& t);
Weight weight_of(const Word& w, const CartanType& t);

/// Columns of the highest-weight tableau read bottom to top, left to right.
Word highest_weight_word(const CartanType& t, const Weight& lambda);

/// Tableau rows -> word under the same column reading. Rows must form a
/// partition shape.
Word word_from_tableau(const std::vector<std::vector<Letter>>& rows);
/// Inverse of word_from_tableau for a word of a graph with shape lambda.
std::vector<std::vector<Letter>> tableau_from_word(const Word& w, const Weight& lambda);

std::string letter_to_string(Letter l);
std::string word_to_string(const Word& w);  // comma separated, bars as '-'
/// Parses "3,-3,1,2" style words.
Word parse_word(const std::string& s);
/// Parses rows separated by '/', entries by ','. Example: "2,2,4/3".
std::vector<std::vector<Letter>> parse_tableau(const std::string& s);

struct Edge {
  VertexId from;
  VertexId to;
  Color color;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable crystal graph B(lambda) with per-color successor and
/// predecessor maps.
class CrystalGraph {
 public:
  const CartanType& cartan() const { return cartan_; }
  const Weight& lambda() const { return lambda_; }
  int rank() const { return n_; }
  std::size_t size() const { return size_; }
  std::size_t word_length() const { return word_length_; }
  std::size_t edge_count() const { return edge_count_; }

  Word word(VertexId x) const;
  Weight weight(VertexId x) const;
  /// Multiplicities of lambda - wt(x) in simple roots.
  std::span<const int> depth(VertexId x) const {
    return {depth_.data() + static_cast<std::size_t>(x) * n_, static_cast<std::size_t>(n_)};
  }
  /// Distance from the highest weight element.
  int level(VertexId x) const { return level_[x]; }

  VertexId f(VertexId x, Color i) const { return f_[static_cast<std::size_t>(x) * n_ + (i - 1)]; }
  VertexId e(VertexId x, Color i) const { return e_[static_cast<std::size_t>(x) * n_ + (i - 1)]; }
  /// Follows the labels in application order; kNoVertex if any step fails.
  VertexId apply_path(VertexId x, std::span<const Color> labels) const;

  std::optional<VertexId> find(const Word& w) const;
  VertexId highest_weight() const { return source_; }
  StringStatistics string_stats(VertexId x) const;

  /// Edges sorted by (from, color).
  std::vector<Edge> edges() const;

  /// Copy with the f_i edge out of x removed. Used to exercise the axiom
  /// checker on faulty input.
  CrystalGraph without_edge(VertexId x, Color i) const;

  /// Builds a graph from explicit data (deserialization). Checks word
  /// lengths, id uniqueness and at most one edge per color in each direction.
  static CrystalGraph from_parts(const CartanType& t, const Weight& lambda,
                                 const std::vector<Word>& words,
                                 const std::vector<Edge>& edges);

  friend CrystalGraph generate(const CartanType& t, const Weight& lambda, std::size_t cap);

 private:
  CrystalGraph(const CartanType& t, Weight lambda);
  void finalize();

  CartanType cartan_;
  Weight lambda_;
  int n_ = 0;
  std::size_t size_ = 0;
  std::size_t word_length_ = 0;
  std::size_t edge_count_ = 0;
  VertexId source_ = 0;
  std::vector<std::int8_t> letters_;  // size_ * word_length_
  std::vector<int> weights_;          // size_ * ambient_dim
  std::vector<int> depth_;            // size_ * n_
  std::vector<int> level_;
  std::vector<VertexId> f_;
  std::vector<VertexId> e_;
  std::unordered_map<std::string, VertexId> index_;
};

/// Breadth-first closure of the highest weight word under every f_i. Ids are
/// assigned in discovery order, colors tried in increasing order. Throws
/// SizeCapExceeded once more than cap vertices are discovered.
CrystalGraph generate(const CartanType& t, const Weight& lambda,
                      std::size_t cap = kDefaultVertexCap);

/// The crystal of the vector representation as a graph on one-letter words.
CrystalGraph standard_crystal(const CartanType& t);

}  // namespace crystalmorse
