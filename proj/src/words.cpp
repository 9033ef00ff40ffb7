#include "sierpinski/words.hpp"

#include <limits>
#include <stdexcept>

namespace sierpinski {

std::uint64_t pow_checked(std::uint64_t m, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (m != 0 && r > std::numeric_limits<std::uint64_t>::max() / m)
      throw std::overflow_error("m^n does not fit in 64 bits");
    r *= m;
  }
  return r;
}

WordSpace::WordSpace(int n_, int m_) : n(n_), m(m_) {
  if (n < 0 || m < 1) throw std::invalid_argument("WordSpace requires n >= 0, m >= 1");
  if (m > 10) throw std::invalid_argument("digit alphabets beyond 10 are not supported");
  pw.resize(n + 1);
  pw[0] = 1;
  for (int i = 1; i <= n; ++i) {
    if (pw[i - 1] > std::numeric_limits<Code>::max() / static_cast<std::uint64_t>(m))
      throw std::overflow_error("m^n exceeds the packed code range");
    pw[i] = pw[i - 1] * m;
  }
}

std::vector<int> WordSpace::digits(Code c) const {
  std::vector<int> ds(n);
  for (int pos = 1; pos <= n; ++pos) ds[pos - 1] = digit(c, pos);
  return ds;
}

Code WordSpace::code(const std::vector<int>& ds) const {
  if (static_cast<int>(ds.size()) != n) throw std::invalid_argument("wrong word length");
  std::uint64_t c = 0;
  for (int d : ds) {
    if (d < 0 || d >= m) throw std::invalid_argument("digit out of range");
    c = c * m + static_cast<std::uint64_t>(d);
  }
  return static_cast<Code>(c);
}

std::string WordSpace::str(Code c) const {
  std::string s(n, '0');
  for (int pos = 1; pos <= n; ++pos) s[pos - 1] = static_cast<char>('0' + digit(c, pos));
  return s;
}

Code WordSpace::parse(const std::string& s) const {
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("wrong word length: " + s);
  std::vector<int> ds(n);
  for (int i = 0; i < n; ++i) {
    if (s[i] < '0' || s[i] >= '0' + m) throw std::invalid_argument("bad digit in word: " + s);
    ds[i] = s[i] - '0';
  }
  return code(ds);
}

Code WordSpace::relabel(Code c, const std::vector<int>& perm) const {
  std::uint64_t r = 0;
  for (int pos = 1; pos <= n; ++pos) r = r * m + static_cast<std::uint64_t>(perm[digit(c, pos)]);
  return static_cast<Code>(r);
}

Code WordSpace::transpose(Code c, int i, int j) const {
  std::uint64_t r = 0;
  for (int pos = 1; pos <= n; ++pos) {
    int d = digit(c, pos);
    if (d == i) d = j;
    else if (d == j) d = i;
    r = r * m + static_cast<std::uint64_t>(d);
  }
  return static_cast<Code>(r);
}

int WordSpace::first_of_pair(Code c, int i, int j) const {
  for (int pos = 1; pos <= n; ++pos) {
    int d = digit(c, pos);
    if (d == i || d == j) return pos;
  }
  return 0;
}

std::uint64_t WordSpace::rank_permuted(Code c, const std::vector<int>& perm) const {
  return relabel(c, perm);
}

Code WordSpace::unrank_permuted(std::uint64_t r, const std::vector<int>& perm) const {
  std::vector<int> inv(m);
  for (int d = 0; d < m; ++d) inv[perm[d]] = d;
  std::uint64_t c = 0;
  for (int pos = 1; pos <= n; ++pos) {
    std::uint64_t q = pw[n - pos];
    c = c * m + static_cast<std::uint64_t>(inv[(r / q) % m]);
  }
  return static_cast<Code>(c);
}

}  // namespace sierpinski
