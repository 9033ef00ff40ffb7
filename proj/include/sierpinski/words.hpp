#pragma once

// Words over the alphabet {0,...,m-1} of fixed length n, stored as packed
// base-m codes. Code values coincide with 0-based lexicographic ranks, so
// Lex(v) = code(v) + 1 throughout.

#include <cstdint>
#include <string>
#include <vector>

namespace sierpinski {

using Code = std::uint32_t;

// Checked m^n in 64 bits; throws std::overflow_error if it does not fit.
std::uint64_t pow_checked(std::uint64_t m, unsigned n);

// Word length/alphabet context with digit accessors. Positions are 1-based
// from the left (the most significant digit is position 1).
struct WordSpace {
  int n;
  int m;
  std::vector<std::uint64_t> pw;  // pw[i] = m^i, i = 0..n

  WordSpace(int n_, int m_);

  std::uint64_t size() const { return pw[n]; }

  int digit(Code c, int pos) const {
    return static_cast<int>((c / pw[n - pos]) % static_cast<std::uint64_t>(m));
  }

  Code with_digit(Code c, int pos, int d) const {
    std::uint64_t p = pw[n - pos];
    std::uint64_t head = c / (p * m) * (p * m);
    std::uint64_t tail = c % p;
    return static_cast<Code>(head + static_cast<std::uint64_t>(d) * p + tail);
  }

  std::vector<int> digits(Code c) const;
  Code code(const std::vector<int>& ds) const;

  // Digit string such as "021"; digits >= 10 are rejected at construction.
  std::string str(Code c) const;
  Code parse(const std::string& s) const;  // throws std::invalid_argument

  // Applies a digit relabeling to every position: result digit_i = perm[v_i].
  Code relabel(Code c, const std::vector<int>& perm) const;

  // Swaps digits i and j in every position.
  Code transpose(Code c, int i, int j) const;

  // First position whose digit is i or j, or 0 if neither occurs.
  int first_of_pair(Code c, int i, int j) const;

  // Rank of c in the lexicographic order that relabels digits through perm
  // (the word is ranked by perm[v_1], ..., perm[v_n]). perm = identity gives
  // back c. Ranks are 0-based.
  std::uint64_t rank_permuted(Code c, const std::vector<int>& perm) const;

  // Inverse: the code whose permuted rank is r.
  Code unrank_permuted(std::uint64_t r, const std::vector<int>& perm) const;
};

}  // namespace sierpinski
