#include <vecvar/partitions.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vecvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Partition(conj);
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::operator<(const Partition& o) const {
  int s = size(), t = o.size();
  if (s != t) return s < t;
  return parts_ > o.parts_;  // larger first part comes earlier
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string trimmed;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  if (trimmed.empty()) return {};
  std::stringstream ss(trimmed);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw DomainError("malformed partition: '" + text + "'");
    }
    if (pos != tok.size()) throw DomainError("malformed partition: '" + text + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> partitions_of(int size, int max_length) {
  std::vector<Partition> out;
  if (size == 0) {
    out.emplace_back();
    return out;
  }
  if (max_length <= 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;  // descending first parts first = the library order
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s) {
    auto block = partitions_of(s, max_length);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

long ssyt_count(const Partition& lambda, int n, int cap) {
  if (lambda.size() > cap) throw DomainError("oracle too large");
  if (lambda.empty()) return 1;
  if (n <= 0 || lambda.length() > n) return 0;
  int rows = lambda.length();
  std::vector<std::vector<int>> t(rows);
  for (int i = 0; i < rows; ++i) t[i].assign(lambda.part(i), 0);

  long count = 0;
  // Fill cells row by row, left to right; rows weakly increase, columns
  // strictly increase.
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      ++count;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == lambda.part(r)) {
      ++nr;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0 && c < lambda.part(r - 1)) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      rec(nr, nc);
    }
  };
  rec(0, 0);
  return count;
}

long lr_coefficient(const Partition& mu, const Partition& nu,
                    const Partition& lambda, int cap) {
  if (lambda.size() > cap) throw DomainError("oracle too large");
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!lambda.contains(mu)) return 0;
  if (nu.length() > lambda.length()) return 0;
  if (nu.empty()) return mu == lambda ? 1 : 0;

  int rows = lambda.length();
  int m = nu.length();
  // Cells of lambda/mu are visited row by row, right to left, which emits
  // the reverse reading word in order; the lattice condition is checked on
  // the fly via running content counts.
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = lambda.part(r) - 1; c >= mu.part(r); --c)
      cells.push_back({r, c});

  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lambda.part(r), 0);
  std::vector<int> used(m + 2, 0);

  long count = 0;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int hi = m;
    // Semistandard: weakly increasing along rows, strictly down columns.
    if (c + 1 < lambda.part(r)) hi = std::min(hi, t[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= mu.part(r - 1) && c < lambda.part(r - 1))
      lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (used[v] + 1 > nu.part(v - 1)) continue;  // content bounded by nu
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
      ++used[v];
      t[r][c] = v;
      rec(idx + 1);
      --used[v];
    }
  };
  rec(0);
  return count;
}

Int schur_dimension_int(const Partition& lambda, int n) {
  if (n < 0) throw DomainError("negative dimension");
  if (lambda.length() > n) return Int(0);
  Int num(1), den(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= lambda.part(i - 1) - lambda.part(j - 1) + j - i;
      den *= j - i;
    }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

long schur_dimension(const Partition& lambda, int n) {
  Int d = schur_dimension_int(lambda, n);
  if (!d.fits_slong_p()) throw DomainError("schur dimension overflow");
  return d.get_si();
}

}  // namespace vecvar
