#pragma once

// Occupation words, basis orderings and box-relabeling operators for n
// distinguishable particles in n boxes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace statmon {

inline constexpr int kMinBoxes = 2;
inline constexpr int kMaxBoxes = 7;

// Throws CapacityError unless kMinBoxes <= n <= kMaxBoxes.
void require_supported(int n);

std::size_t factorial(int n);

enum class Sign : int { kMinus = -1, kPlus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline double to_double(Sign s) { return static_cast<double>(static_cast<int>(s)); }
// Throws ValidationError unless value is +1 or -1.
Sign sign_from_int(int value);
char sign_char(Sign s);

struct BoxLabel {
  int index = 0;

  char letter() const { return static_cast<char>('A' + index); }
  friend auto operator<=>(const BoxLabel&, const BoxLabel&) = default;
};

// Position k holds the box of particle k.  Always a permutation of [0, n).
class OccupationWord {
 public:
  explicit OccupationWord(std::vector<int> boxes);

  // "ABC" style; letters must be a permutation of the first n letters.
  static OccupationWord parse(std::string_view letters);

  int size() const { return static_cast<int>(boxes_.size()); }
  BoxLabel box_of(int particle) const { return {boxes_[static_cast<std::size_t>(particle)]}; }
  std::span<const int> boxes() const { return boxes_; }
  std::string str() const;

  friend bool operator==(const OccupationWord&, const OccupationWord&) = default;

 private:
  std::vector<int> boxes_;
};

// Unordered pair of boxes, stored with x < y.
struct Pair {
  BoxLabel x;
  BoxLabel y;

  // Accepts either order; rejects a == b or negative labels.
  static Pair of(int a, int b);
  // "AB", "ca", ... (order of letters is irrelevant).
  static Pair parse(std::string_view letters);

  std::string str() const;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Pair order used for v-vectors and objectives.  For n = 3 this is
// (AB, BC, AC); otherwise lexicographic (AB, AC, AD, BC, ...).
std::vector<Pair> canonical_pairs(int n);

// Position of `pair` inside canonical_pairs(n).
std::size_t pair_index(int n, Pair pair);

enum class OrderingKind { kPaper3, kLexicographic };

// Bijection between occupation words and basis indices [0, n!).  n = 3 uses
// ABC, BAC, CAB, CBA, ACB, BCA; every other n uses lexicographic order.
class BasisOrdering {
 public:
  BasisOrdering(int n, OrderingKind kind);

  // The ordering used everywhere inside the library for a given n.
  static const BasisOrdering& canonical(int n);

  int n() const { return n_; }
  OrderingKind kind() const { return kind_; }
  std::size_t dimension() const { return words_.size(); }

  std::size_t index_of(const OccupationWord& word) const;
  const OccupationWord& word_at(std::size_t index) const;

 private:
  int n_;
  OrderingKind kind_;
  std::vector<OccupationWord> words_;
  std::vector<std::uint32_t> index_by_lex_rank_;
};

std::size_t word_to_index(const OccupationWord& word, const BasisOrdering& ordering);
OccupationWord index_to_word(std::size_t index, const BasisOrdering& ordering);

// Every occurrence of pair.x becomes pair.y and vice versa.
OccupationWord relabel(const OccupationWord& word, Pair pair);

// Image of a basis permutation operator:  Op|i> = |image[i]>.
class BasisPermutation {
 public:
  BasisPermutation() = default;
  explicit BasisPermutation(std::vector<std::uint32_t> image);

  static BasisPermutation identity(std::size_t dimension);

  std::size_t dimension() const { return image_.size(); }
  std::uint32_t operator[](std::size_t i) const { return image_[i]; }
  std::span<const std::uint32_t> image() const { return image_; }

  std::size_t fixed_points() const;
  bool is_involution() const;
  BasisPermutation inverse() const;
  // Dense matrix with M(image[i], i) = 1.
  Eigen::MatrixXd dense() const;

  // Operator product: (a * b)|i> = a|b[i]>.
  friend BasisPermutation operator*(const BasisPermutation& a, const BasisPermutation& b);
  friend bool operator==(const BasisPermutation&, const BasisPermutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

BasisPermutation power(const BasisPermutation& op, int exponent);

// Pi_XY: relabels boxes X <-> Y in every word.
struct ExchangeOperator {
  int n = 0;
  Pair pair;
  BasisPermutation mapping;

  Eigen::MatrixXd dense() const { return mapping.dense(); }
};

ExchangeOperator exchange_operator(int n, Pair pair,
                                   const BasisOrdering& ordering);
ExchangeOperator exchange_operator(int n, Pair pair);

// Three-cycle of box labels A -> B -> C -> A, so S|A,B,C> = |B,C,A>.  This is
// the operator Pi_AB * Pi_BC.  Only defined for n = 3.
BasisPermutation cyclic_operator(const BasisOrdering& ordering);
BasisPermutation cyclic_operator();

}  // namespace statmon
