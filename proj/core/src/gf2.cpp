#include "colorgates/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace colorgates {

namespace {

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + BitVec::kWordBits - 1) / BitVec::kWordBits;
}

}  // namespace

BitVec::BitVec(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVec BitVec::from_indices(std::size_t length, std::span<const std::size_t> indices) {
  BitVec v(length);
  for (auto i : indices) v.flip(i);
  return v;
}

BitVec BitVec::from_indices(std::size_t length, std::initializer_list<std::size_t> indices) {
  return from_indices(length, std::span<const std::size_t>(indices.begin(), indices.size()));
}

BitVec BitVec::from_bits(std::initializer_list<int> bits) {
  BitVec v(bits.size());
  std::size_t i = 0;
  for (int b : bits) v.set(i++, b != 0);
  return v;
}

BitVec BitVec::from_u64(std::size_t length, std::uint64_t value) {
  if (length > kWordBits) throw std::invalid_argument("BitVec::from_u64: length exceeds 64");
  BitVec v(length);
  if (length == 0) return v;
  if (length < kWordBits) value &= (std::uint64_t{1} << length) - 1;
  v.words_[0] = value;
  return v;
}

void BitVec::check_index(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("BitVec index " + std::to_string(i) + " out of range");
}

void BitVec::check_same_size(const BitVec& other) const {
  if (length_ != other.length_) {
    throw std::invalid_argument("BitVec dimension mismatch: " + std::to_string(length_) + " vs " +
                                std::to_string(other.length_));
  }
}

bool BitVec::test(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVec::set(std::size_t i, bool value) {
  check_index(i);
  const word_type bit = word_type{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

void BitVec::flip(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] ^= word_type{1} << (i % kWordBits);
}

void BitVec::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::size_t BitVec::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVec::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

std::size_t BitVec::lowest() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return length_;
}

std::vector<std::size_t> BitVec::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    word_type w = words_[k];
    while (w != 0) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t BitVec::to_u64() const {
  if (length_ > kWordBits) throw std::invalid_argument("BitVec::to_u64: length exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

BitVec BitVec::operator~() const {
  BitVec out(length_);
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
  if (length_ % kWordBits != 0 && !out.words_.empty()) {
    out.words_.back() &= (word_type{1} << (length_ % kWordBits)) - 1;
  }
  return out;
}

bool dot(const BitVec& a, const BitVec& b) { return (overlap(a, b) & 1U) != 0; }

std::size_t overlap(const BitVec& a, const BitVec& b) {
  a.check_same_size(b);
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
  }
  return c;
}

bool BitVec::is_subset_of(const BitVec& other) const {
  check_same_size(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                b.words_.end());
}

std::string BitVec::to_string() const {
  std::string s(length_, '0');
  for (auto i : indices()) s[i] = '1';
  return s;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (auto w : v.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged initializer");
    rows_.push_back(BitVec::from_bits(r));
  }
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVec> rows) {
  BitMatrix m(cols);
  for (auto& r : rows) m.push_back(std::move(r));
  return m;
}

void BitMatrix::push_back(BitVec row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("BitMatrix row length " + std::to_string(row.size()) +
                                " does not match " + std::to_string(cols_));
  }
  rows_.push_back(std::move(row));
  reduced_ = false;
}

BitVec BitMatrix::combine(const BitVec& x) const {
  if (x.size() != rows_.size()) throw std::invalid_argument("BitMatrix::combine: dimension mismatch");
  BitVec out(cols_);
  for (auto i : x.indices()) out ^= rows_[i];
  return out;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
  BitVec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (dot(rows_[i], v)) out.set(i);
  }
  return out;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (auto c : m.row(r).indices()) t.set(c, r);
  }
  return t;
}

BitMatrix row_reduce(const BitMatrix& m) {
  std::vector<BitVec> rows = m.row_vectors();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && !rows[piv].test(col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != lead && rows[r].test(col)) rows[r] ^= rows[lead];
    }
    ++lead;
  }
  rows.resize(lead);
  BitMatrix out = BitMatrix::from_rows(m.cols(), std::move(rows));
  out.reduced_ = true;
  return out;
}

std::size_t rank(const BitMatrix& m) {
  Gf2Span s(m);
  return s.dim();
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b) {
  if (b.size() != m.cols()) throw std::invalid_argument("solve: dimension mismatch");
  return Gf2Solver(m).solve(b);
}

bool in_span(const BitMatrix& m, const BitVec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_span: dimension mismatch");
  return Gf2Span(m).contains(v);
}

BitMatrix null_space(const BitMatrix& m) {
  BitMatrix r = row_reduce(m);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    auto p = r.row(i).lowest();
    pivots.push_back(p);
    is_pivot[p] = true;
  }
  BitMatrix out(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (r.row(i).test(free)) v.set(pivots[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

int symplectic_commutator(const BitVec& x_mask, const BitVec& z_mask) {
  return dot(x_mask, z_mask) ? -1 : 1;
}

// ---------------------------------------------------------------------------

Gf2Span::Gf2Span(const BitMatrix& m) : cols_(m.cols()) { insert_all(m); }

bool Gf2Span::insert(const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("Gf2Span::insert: dimension mismatch");
  const std::size_t id = inserted_++;
  if (inserted_ > combo_cap_) {
    // Grow certificate storage geometrically so insertion stays amortised.
    combo_cap_ = std::max<std::size_t>(64, 2 * combo_cap_);
    for (auto& row : basis_) {
      BitVec c(combo_cap_);
      for (auto i : row.combo.indices()) c.set(i);
      row.combo = std::move(c);
    }
  }
  Row fresh{v, BitVec(combo_cap_), 0};
  fresh.combo.set(id);
  for (const auto& row : basis_) {
    if (fresh.vec.test(row.pivot)) {
      fresh.vec ^= row.vec;
      fresh.combo ^= row.combo;
    }
  }
  if (fresh.vec.none()) return false;
  fresh.pivot = fresh.vec.lowest();
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), fresh.pivot,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  basis_.insert(pos, std::move(fresh));
  return true;
}

void Gf2Span::insert_all(const BitMatrix& m) {
  for (const auto& r : m.row_vectors()) insert(r);
}

BitVec Gf2Span::reduce(BitVec v) const {
  if (v.size() != cols_) throw std::invalid_argument("Gf2Span::reduce: dimension mismatch");
  for (const auto& row : basis_) {
    if (v.test(row.pivot)) v ^= row.vec;
  }
  return v;
}

bool Gf2Span::contains_all(const BitMatrix& m) const {
  return std::all_of(m.row_vectors().begin(), m.row_vectors().end(),
                     [&](const BitVec& r) { return contains(r); });
}

std::optional<BitVec> Gf2Span::express(const BitVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Gf2Span::express: dimension mismatch");
  BitVec rem = v;
  BitVec combo(combo_cap_);
  for (const auto& row : basis_) {
    if (rem.test(row.pivot)) {
      rem ^= row.vec;
      combo ^= row.combo;
    }
  }
  if (rem.any()) return std::nullopt;
  BitVec out(inserted_);
  for (auto i : combo.indices()) out.set(i);
  return out;
}

BitMatrix Gf2Span::basis() const {
  BitMatrix m(cols_);
  for (const auto& row : basis_) m.push_back(row.vec);
  return m;
}

BitMatrix Gf2Span::canonical_basis() const { return row_reduce(basis()); }

bool same_span(const Gf2Span& a, const Gf2Span& b) {
  if (a.cols_ != b.cols_ || a.dim() != b.dim()) return false;
  return std::all_of(b.basis_.begin(), b.basis_.end(),
                     [&](const Gf2Span::Row& r) { return a.contains(r.vec); });
}

// ---------------------------------------------------------------------------

Gf2Solver::Gf2Solver(const BitMatrix& m) : vars_(m.rows()), eqs_(m.cols()) {
  // Equations are the columns of m: row c of A = m^T reads sum_i x_i m[i][c].
  BitMatrix a = transpose(m);
  std::vector<BitVec> rows = a.row_vectors();
  ops_.reserve(eqs_);
  for (std::size_t i = 0; i < eqs_; ++i) ops_.push_back(BitVec::from_indices(eqs_, {i}));
  std::size_t lead = 0;
  for (std::size_t col = 0; col < vars_ && lead < eqs_; ++col) {
    std::size_t piv = lead;
    while (piv < eqs_ && !rows[piv].test(col)) ++piv;
    if (piv == eqs_) continue;
    std::swap(rows[lead], rows[piv]);
    std::swap(ops_[lead], ops_[piv]);
    for (std::size_t r = 0; r < eqs_; ++r) {
      if (r != lead && rows[r].test(col)) {
        rows[r] ^= rows[lead];
        ops_[r] ^= ops_[lead];
      }
    }
    pivot_rows_.push_back(col);
    ++lead;
  }
}

BitVec Gf2Solver::transform(const BitVec& b) const {
  if (b.size() != eqs_) throw std::invalid_argument("Gf2Solver: dimension mismatch");
  BitVec c(eqs_);
  for (std::size_t r = 0; r < eqs_; ++r) {
    if (dot(ops_[r], b)) c.set(r);
  }
  return c;
}

bool Gf2Solver::consistent(const BitVec& b) const {
  BitVec c = transform(b);
  for (std::size_t r = pivot_rows_.size(); r < eqs_; ++r) {
    if (c.test(r)) return false;
  }
  return true;
}

std::optional<BitVec> Gf2Solver::solve(const BitVec& b) const {
  BitVec c = transform(b);
  for (std::size_t r = pivot_rows_.size(); r < eqs_; ++r) {
    if (c.test(r)) return std::nullopt;
  }
  BitVec x(vars_);
  for (std::size_t r = 0; r < pivot_rows_.size(); ++r) {
    if (c.test(r)) x.set(pivot_rows_[r]);
  }
  return x;
}

}  // namespace colorgates
