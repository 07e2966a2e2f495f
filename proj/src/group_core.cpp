#include "statmon/group_core.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>

#include "statmon/errors.hpp"

namespace statmon {

namespace {

// Lexicographic rank of a permutation via its Lehmer code.
std::size_t lex_rank(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) {
      if (word[j] < word[i]) ++smaller_later;
    }
    rank += static_cast<std::size_t>(smaller_later) * factorial(n - 1 - i);
  }
  return rank;
}

std::vector<OccupationWord> lexicographic_words(int n) {
  std::vector<int> boxes(static_cast<std::size_t>(n));
  std::iota(boxes.begin(), boxes.end(), 0);
  std::vector<OccupationWord> words;
  words.reserve(factorial(n));
  do {
    words.emplace_back(boxes);
  } while (std::next_permutation(boxes.begin(), boxes.end()));
  return words;
}

}  // namespace

void require_supported(int n) {
  if (n < kMinBoxes || n > kMaxBoxes) {
    throw CapacityError("number of boxes must be in [" + std::to_string(kMinBoxes) + ", " +
                        std::to_string(kMaxBoxes) + "], got " + std::to_string(n));
  }
}

Sign sign_from_int(int value) {
  if (value == 1) return Sign::kPlus;
  if (value == -1) return Sign::kMinus;
  throw ValidationError("sign must be +1 or -1, got " + std::to_string(value));
}

char sign_char(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

std::size_t factorial(int n) {
  std::size_t result = 1;
  for (int k = 2; k <= n; ++k) result *= static_cast<std::size_t>(k);
  return result;
}

OccupationWord::OccupationWord(std::vector<int> boxes) : boxes_(std::move(boxes)) {
  const int n = static_cast<int>(boxes_.size());
  std::vector<bool> seen(boxes_.size(), false);
  for (int box : boxes_) {
    if (box < 0 || box >= n) {
      throw ValidationError("occupation word contains a box outside [0, " + std::to_string(n) +
                            ")");
    }
    if (seen[static_cast<std::size_t>(box)]) {
      throw ValidationError("occupation word places two particles in box " +
                            std::string(1, static_cast<char>('A' + box)));
    }
    seen[static_cast<std::size_t>(box)] = true;
  }
}

OccupationWord OccupationWord::parse(std::string_view letters) {
  std::vector<int> boxes;
  boxes.reserve(letters.size());
  for (char c : letters) {
    if (c == ',' || c == ' ') continue;
    const char upper = (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
    if (upper < 'A' || upper > 'Z') {
      throw ValidationError("invalid box letter '" + std::string(1, c) + "'");
    }
    boxes.push_back(upper - 'A');
  }
  return OccupationWord(std::move(boxes));
}

std::string OccupationWord::str() const {
  std::string out;
  out.reserve(boxes_.size());
  for (int box : boxes_) out.push_back(static_cast<char>('A' + box));
  return out;
}

Pair Pair::of(int a, int b) {
  if (a < 0 || b < 0) throw ValidationError("box labels must be non-negative");
  if (a == b) throw ValidationError("a pair needs two distinct boxes");
  return a < b ? Pair{{a}, {b}} : Pair{{b}, {a}};
}

Pair Pair::parse(std::string_view letters) {
  if (letters.size() != 2) {
    throw ValidationError("pair must be two box letters, got '" + std::string(letters) + "'");
  }
  auto to_index = [&](char c) {
    const char upper = (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
    if (upper < 'A' || upper > 'Z') {
      throw ValidationError("invalid box letter in pair '" + std::string(letters) + "'");
    }
    return upper - 'A';
  };
  return of(to_index(letters[0]), to_index(letters[1]));
}

std::string Pair::str() const { return {x.letter(), y.letter()}; }

std::vector<Pair> canonical_pairs(int n) {
  if (n == 3) return {Pair::of(0, 1), Pair::of(1, 2), Pair::of(0, 2)};
  std::vector<Pair> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.push_back(Pair::of(a, b));
  }
  return pairs;
}

std::size_t pair_index(int n, Pair pair) {
  const auto pairs = canonical_pairs(n);
  const auto it = std::find(pairs.begin(), pairs.end(), pair);
  if (it == pairs.end()) {
    throw ValidationError("pair " + pair.str() + " is not valid for n = " + std::to_string(n));
  }
  return static_cast<std::size_t>(it - pairs.begin());
}

BasisOrdering::BasisOrdering(int n, OrderingKind kind) : n_(n), kind_(kind) {
  require_supported(n);
  if (kind == OrderingKind::kPaper3) {
    if (n != 3) throw ValidationError("the paper3 ordering exists only for n = 3");
    for (const char* w : {"ABC", "BAC", "CAB", "CBA", "ACB", "BCA"}) {
      words_.push_back(OccupationWord::parse(w));
    }
  } else {
    words_ = lexicographic_words(n);
  }
  index_by_lex_rank_.assign(words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    index_by_lex_rank_[lex_rank(words_[i].boxes())] = static_cast<std::uint32_t>(i);
  }
}

const BasisOrdering& BasisOrdering::canonical(int n) {
  require_supported(n);
  static const auto table = [] {
    std::array<std::unique_ptr<BasisOrdering>, kMaxBoxes + 1> t;
    for (int k = kMinBoxes; k <= kMaxBoxes; ++k) {
      t[static_cast<std::size_t>(k)] = std::make_unique<BasisOrdering>(
          k, k == 3 ? OrderingKind::kPaper3 : OrderingKind::kLexicographic);
    }
    return t;
  }();
  return *table[static_cast<std::size_t>(n)];
}

std::size_t BasisOrdering::index_of(const OccupationWord& word) const {
  if (word.size() != n_) {
    throw ValidationError("word " + word.str() + " has " + std::to_string(word.size()) +
                          " particles, ordering expects " + std::to_string(n_));
  }
  return index_by_lex_rank_[lex_rank(word.boxes())];
}

const OccupationWord& BasisOrdering::word_at(std::size_t index) const {
  if (index >= words_.size()) {
    throw ValidationError("basis index " + std::to_string(index) + " out of range");
  }
  return words_[index];
}

std::size_t word_to_index(const OccupationWord& word, const BasisOrdering& ordering) {
  return ordering.index_of(word);
}

OccupationWord index_to_word(std::size_t index, const BasisOrdering& ordering) {
  return ordering.word_at(index);
}

OccupationWord relabel(const OccupationWord& word, Pair pair) {
  if (pair.y.index >= word.size()) {
    throw ValidationError("pair " + pair.str() + " is not valid for word " + word.str());
  }
  std::vector<int> boxes(word.boxes().begin(), word.boxes().end());
  for (int& box : boxes) {
    if (box == pair.x.index) {
      box = pair.y.index;
    } else if (box == pair.y.index) {
      box = pair.x.index;
    }
  }
  return OccupationWord(std::move(boxes));
}

BasisPermutation::BasisPermutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto target : image_) {
    if (target >= image_.size() || hit[target]) {
      throw ValidationError("basis map is not a permutation");
    }
    hit[target] = true;
  }
}

BasisPermutation BasisPermutation::identity(std::size_t dimension) {
  std::vector<std::uint32_t> image(dimension);
  std::iota(image.begin(), image.end(), 0U);
  return BasisPermutation(std::move(image));
}

std::size_t BasisPermutation::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] == i) ++count;
  }
  return count;
}

bool BasisPermutation::is_involution() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[image_[i]] != i) return false;
  }
  return true;
}

BasisPermutation BasisPermutation::inverse() const {
  std::vector<std::uint32_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<std::uint32_t>(i);
  return BasisPermutation(std::move(inv));
}

Eigen::MatrixXd BasisPermutation::dense() const {
  const auto d = static_cast<Eigen::Index>(image_.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(image_[static_cast<std::size_t>(i)], i) = 1.0;
  return m;
}

BasisPermutation operator*(const BasisPermutation& a, const BasisPermutation& b) {
  if (a.dimension() != b.dimension()) {
    throw ContractError("cannot compose basis maps of different dimension");
  }
  std::vector<std::uint32_t> image(a.dimension());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = a.image_[b.image_[i]];
  return BasisPermutation(std::move(image));
}

BasisPermutation power(const BasisPermutation& op, int exponent) {
  if (exponent < 0) return power(op.inverse(), -exponent);
  BasisPermutation result = BasisPermutation::identity(op.dimension());
  for (int k = 0; k < exponent; ++k) result = op * result;
  return result;
}

ExchangeOperator exchange_operator(int n, Pair pair, const BasisOrdering& ordering) {
  require_supported(n);
  if (ordering.n() != n) throw ContractError("ordering does not match the number of boxes");
  if (pair.y.index >= n) {
    throw ValidationError("pair " + pair.str() + " is not valid for n = " + std::to_string(n));
  }
  std::vector<std::uint32_t> image(ordering.dimension());
  for (std::size_t i = 0; i < image.size(); ++i) {
    image[i] = static_cast<std::uint32_t>(ordering.index_of(relabel(ordering.word_at(i), pair)));
  }
  return {n, pair, BasisPermutation(std::move(image))};
}

ExchangeOperator exchange_operator(int n, Pair pair) {
  return exchange_operator(n, pair, BasisOrdering::canonical(n));
}

BasisPermutation cyclic_operator(const BasisOrdering& ordering) {
  if (ordering.n() != 3) throw UnsupportedError("the cyclic operator S is defined for n = 3 only");
  std::vector<std::uint32_t> image(ordering.dimension());
  for (std::size_t i = 0; i < image.size(); ++i) {
    const auto& word = ordering.word_at(i);
    std::vector<int> boxes(word.boxes().begin(), word.boxes().end());
    for (int& box : boxes) box = (box + 1) % 3;
    image[i] = static_cast<std::uint32_t>(ordering.index_of(OccupationWord(std::move(boxes))));
  }
  return BasisPermutation(std::move(image));
}

BasisPermutation cyclic_operator() { return cyclic_operator(BasisOrdering::canonical(3)); }

}  // namespace statmon
