#pragma once

// Bit-packed linear algebra over GF(2).
//
// Vectors are fixed-length and stored in 64-bit words. Every operation that
// combines two vectors checks that the lengths agree and throws
// std::invalid_argument otherwise.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace colorgates {

class BitVec {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t length);

  static BitVec from_indices(std::size_t length, std::span<const std::size_t> indices);
  static BitVec from_indices(std::size_t length, std::initializer_list<std::size_t> indices);
  static BitVec from_bits(std::initializer_list<int> bits);
  // Low bits of `value` become positions 0..length-1.
  static BitVec from_u64(std::size_t length, std::uint64_t value);

  std::size_t size() const noexcept { return length_; }
  std::size_t num_words() const noexcept { return words_.size(); }

  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  bool parity() const noexcept { return (count() & 1U) != 0; }

  // Index of the lowest set bit, or size() when the vector is zero.
  std::size_t lowest() const noexcept;
  std::vector<std::size_t> indices() const;
  // Only valid for size() <= 64.
  std::uint64_t to_u64() const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  BitVec operator~() const;

  // Parity of |a ∩ b|.
  friend bool dot(const BitVec& a, const BitVec& b);
  // |a ∩ b|.
  friend std::size_t overlap(const BitVec& a, const BitVec& b);
  bool is_subset_of(const BitVec& other) const;

  friend bool operator==(const BitVec& a, const BitVec& b) noexcept = default;
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept;

  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }

  // "0110..." with position 0 first.
  std::string to_string() const;

 private:
  void check_same_size(const BitVec& other) const;
  void check_index(std::size_t i) const;

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept;
};

// Dense matrix stored as rows of equal length.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);
  static BitMatrix from_rows(std::size_t cols, std::vector<BitVec> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_.empty(); }

  const BitVec& row(std::size_t i) const { return rows_.at(i); }
  BitVec& row(std::size_t i) { return rows_.at(i); }
  const std::vector<BitVec>& row_vectors() const noexcept { return rows_; }

  void push_back(BitVec row);
  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_.at(r).set(c, v); }

  // x·M: XOR of the rows selected by x.
  BitVec combine(const BitVec& x) const;
  // M·v: per-row parity of the overlap with v.
  BitVec apply(const BitVec& v) const;

  // Marks whether the rows are known to be in reduced row echelon form.
  bool is_reduced() const noexcept { return reduced_; }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  friend BitMatrix row_reduce(const BitMatrix& m);

  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
  bool reduced_ = false;
};

BitMatrix transpose(const BitMatrix& m);

// Reduced row echelon form, zero rows dropped. The row space is preserved.
BitMatrix row_reduce(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

// Returns x with x·m = b, or nothing if b is outside the row space. Free
// variables are set to zero, so the answer is canonical for a given m.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b);
bool in_span(const BitMatrix& m, const BitVec& v);

// Basis of {v : m·v = 0}.
BitMatrix null_space(const BitMatrix& m);

// +1 if X_x and Z_z commute, -1 otherwise.
int symplectic_commutator(const BitVec& x_mask, const BitVec& z_mask);

// Incrementally built row space in lowest-bit echelon form. Each stored row
// remembers which inserted vectors it is made from, so membership queries can
// also return a certificate.
class Gf2Span {
 public:
  explicit Gf2Span(std::size_t cols = 0) : cols_(cols) {}
  explicit Gf2Span(const BitMatrix& m);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t num_inserted() const noexcept { return inserted_; }

  // Returns true when v was independent of the current span.
  bool insert(const BitVec& v);
  void insert_all(const BitMatrix& m);

  // Remainder of v after elimination; zero iff v is in the span.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).none(); }
  bool contains_all(const BitMatrix& m) const;
  // Inserted-vector combination that produces v, if v is in the span.
  std::optional<BitVec> express(const BitVec& v) const;

  BitMatrix basis() const;
  // Reduced row echelon basis: canonical for the subspace.
  BitMatrix canonical_basis() const;

  friend bool same_span(const Gf2Span& a, const Gf2Span& b);

 private:
  struct Row {
    BitVec vec;
    BitVec combo;
    std::size_t pivot;
  };
  std::size_t cols_;
  std::size_t inserted_ = 0;
  std::size_t combo_cap_ = 0;
  std::vector<Row> basis_;  // sorted by pivot
};

// Repeated right-hand-side solver for x·m = b, precomputed once per matrix.
class Gf2Solver {
 public:
  explicit Gf2Solver(const BitMatrix& m);

  std::size_t rank() const noexcept { return pivot_rows_.size(); }
  std::size_t num_vars() const noexcept { return vars_; }
  std::size_t num_equations() const noexcept { return eqs_; }

  std::optional<BitVec> solve(const BitVec& b) const;
  bool consistent(const BitVec& b) const;

 private:
  BitVec transform(const BitVec& b) const;

  std::size_t vars_;
  std::size_t eqs_;
  // ops_ rows: transform applied to b, one row per original equation.
  std::vector<BitVec> ops_;
  std::vector<std::size_t> pivot_rows_;  // pivot column (variable) of row r
};

}  // namespace colorgates
