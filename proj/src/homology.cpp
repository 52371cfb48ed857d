#include "cspoly/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "cspoly/errors.hpp"

namespace cspoly {

namespace {

int face_index(const std::vector<Face>& faces, const Face& f) {
  auto it = std::lower_bound(faces.begin(), faces.end(), f);
  if (it == faces.end() || *it != f) throw PreconditionError("boundary face missing from face list");
  return static_cast<int>(it - faces.begin());
}

// Overflow-checked arithmetic for the machine-word elimination; the caller
// retries with GMP integers when it throws.
struct Overflow {};

long long checked_sub_mul(long long a, long long f, long long b) {
  long long prod, out;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
Integer checked_sub_mul(const Integer& a, const Integer& f, const Integer& b) { return a - f * b; }

bool is_unit(long long x) { return x == 1 || x == -1; }
bool is_unit(const Integer& x) { return x == 1 || x == -1; }

Integer to_integer(long long x) { return Integer(static_cast<long>(x)); }
Integer to_integer(const Integer& x) { return x; }

template <typename T>
using SparseRow = std::vector<std::pair<int, T>>;

// Eliminates unit pivots. Returns the number of unit pivots and leaves the
// remaining (non-eliminated) rows in `rows`.
template <typename T>
std::size_t eliminate_unit_pivots(std::vector<SparseRow<T>>& rows, std::size_t n_cols) {
  std::vector<std::vector<int>> col_rows(n_cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));
  std::vector<char> alive(rows.size(), 1);

  auto entry = [&](int r, int c) -> const T* {
    const auto& row = rows[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  };

  // Columns in order of initial length, shortest first.
  std::vector<int> order(n_cols);
  for (std::size_t c = 0; c < n_cols; ++c) order[c] = static_cast<int>(c);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return col_rows[static_cast<std::size_t>(a)].size() < col_rows[static_cast<std::size_t>(b)].size();
  });

  std::size_t pivots = 0;
  for (int c : order) {
    auto& list = col_rows[static_cast<std::size_t>(c)];
    // Drop stale and duplicate entries.
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(), [&](int r) { return !alive[static_cast<std::size_t>(r)] || !entry(r, c); }),
               list.end());
    int pivot = -1;
    for (int r : list)
      if (is_unit(*entry(r, c)) &&
          (pivot < 0 || rows[static_cast<std::size_t>(r)].size() < rows[static_cast<std::size_t>(pivot)].size()))
        pivot = r;
    if (pivot < 0) continue;
    const SparseRow<T> prow = rows[static_cast<std::size_t>(pivot)];
    const T pval = *entry(pivot, c);
    for (int r : list) {
      if (r == pivot) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      T factor = *entry(r, c);
      if (pval != 1) factor = -factor;  // pval is -1
      // row -= factor * prow, merged.
      SparseRow<T> merged;
      merged.reserve(row.size() + prow.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < prow.size()) {
        if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
          merged.push_back(std::move(row[i++]));
        } else if (i == row.size() || prow[j].first < row[i].first) {
          merged.emplace_back(prow[j].first, checked_sub_mul(T(0), factor, prow[j].second));
          col_rows[static_cast<std::size_t>(prow[j].first)].push_back(r);
          ++j;
        } else {
          T v = checked_sub_mul(row[i].second, factor, prow[j].second);
          if (v != 0) merged.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row = std::move(merged);
    }
    alive[static_cast<std::size_t>(pivot)] = 0;
    rows[static_cast<std::size_t>(pivot)].clear();
    list.clear();
    ++pivots;
  }
  std::vector<SparseRow<T>> rest;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (alive[r] && !rows[r].empty()) rest.push_back(std::move(rows[r]));
  rows = std::move(rest);
  return pivots;
}

// Diagonal of a Smith normal form of a dense integer matrix (nonzero entries).
std::vector<Integer> dense_smith_diagonal(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < m && t < n) {
    // Smallest nonzero entry in the remaining block.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  // Normalize to a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

template <typename T>
std::vector<Integer> invariant_factors_as(const BoundaryMatrix& m) {
  std::vector<SparseRow<T>> rows(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (auto [r, v] : m.columns[j]) rows[static_cast<std::size_t>(r)].emplace_back(static_cast<int>(j), T(v));
  std::size_t units = eliminate_unit_pivots(rows, m.cols);
  std::vector<Integer> factors(units, Integer(1));
  if (rows.empty()) return factors;
  // Dense remainder on the columns that still occur.
  std::map<int, std::size_t> col_pos;
  for (const auto& row : rows)
    for (const auto& e : row) col_pos.emplace(e.first, 0);
  std::size_t idx = 0;
  for (auto& [c, p] : col_pos) p = idx++;
  std::vector<std::vector<Integer>> dense(rows.size(), std::vector<Integer>(col_pos.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) dense[r][col_pos[c]] = to_integer(v);
  for (auto& d : dense_smith_diagonal(std::move(dense))) factors.push_back(std::move(d));
  return factors;
}

}  // namespace

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c) {
  std::vector<BoundaryMatrix> out;
  if (c.dim() < 1) return out;
  std::vector<Face> lower = c.faces(0);
  for (int k = 1; k <= c.dim(); ++k) {
    std::vector<Face> upper = c.faces(k);
    BoundaryMatrix m;
    m.k = k;
    m.rows = lower.size();
    m.cols = upper.size();
    m.columns.resize(upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const Face& f = upper[j];
      auto& col = m.columns[j];
      for (std::size_t i = 0; i < f.size(); ++i) {
        Face g;
        g.reserve(f.size() - 1);
        for (std::size_t x = 0; x < f.size(); ++x)
          if (x != i) g.push_back(f[x]);
        col.emplace_back(face_index(lower, g), i % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
    out.push_back(std::move(m));
    lower = std::move(upper);
  }
  return out;
}

bool composes_to_zero(const BoundaryMatrix& a, const BoundaryMatrix& b) {
  if (a.cols != b.rows) throw PreconditionError("boundary matrices are not composable");
  std::vector<long> acc(a.rows, 0);
  for (const auto& col : b.columns) {
    std::vector<int> touched;
    for (auto [mid, v] : col)
      for (auto [row, w] : a.columns[static_cast<std::size_t>(mid)]) {
        acc[static_cast<std::size_t>(row)] += static_cast<long>(v) * w;
        touched.push_back(row);
      }
    bool zero = true;
    for (int r : touched) {
      if (acc[static_cast<std::size_t>(r)] != 0) zero = false;
      acc[static_cast<std::size_t>(r)] = 0;
    }
    if (!zero) return false;
  }
  return true;
}

namespace {

// Column reduction over GF(2) keyed by the lowest (largest) row index.
// Columns listed in `skip` are known to reduce to zero and are not processed.
// Returns the rank and the pivot rows of the reduced columns.
std::size_t reduce_mod2(const BoundaryMatrix& m, const std::vector<char>& skip, std::vector<char>* pivot_rows) {
  std::vector<int> low_owner(m.rows, -1);
  std::vector<std::vector<int>> reduced(m.cols);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (!skip.empty() && skip[j]) continue;
    std::vector<int> col;
    col.reserve(m.columns[j].size());
    for (auto [r, v] : m.columns[j]) col.push_back(r);
    std::vector<int> scratch;
    while (!col.empty()) {
      int owner = low_owner[static_cast<std::size_t>(col.back())];
      if (owner < 0) break;
      const auto& other = reduced[static_cast<std::size_t>(owner)];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (col.empty()) continue;
    low_owner[static_cast<std::size_t>(col.back())] = static_cast<int>(j);
    if (pivot_rows) (*pivot_rows)[static_cast<std::size_t>(col.back())] = 1;
    reduced[j] = std::move(col);
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_mod2(const BoundaryMatrix& m) { return reduce_mod2(m, {}, nullptr); }

std::vector<std::size_t> betti_mod2(const SimplicialComplex& c) {
  if (c.empty()) return {};
  auto fv = f_vector(c);
  auto mats = boundary_matrices(c);
  const std::size_t top = fv.size() - 1;
  std::vector<std::size_t> ranks(fv.size() + 1, 0);  // ranks[k] = rank d_k
  // Top-down with clearing: a (k-1)-face that is the pivot of a reduced
  // column of d_k has a column in d_{k-1} that reduces to zero.
  std::vector<char> cleared;
  for (std::size_t k = top; k >= 1; --k) {
    const auto& m = mats[k - 1];
    std::vector<char> pivots(m.rows, 0);
    ranks[k] = reduce_mod2(m, cleared, &pivots);
    cleared = std::move(pivots);
  }
  std::vector<std::size_t> betti(fv.size());
  for (std::size_t k = 0; k <= top; ++k) betti[k] = fv[k] - ranks[k] - ranks[k + 1];
  return betti;
}

std::vector<Integer> invariant_factors(const BoundaryMatrix& m) {
  try {
    return invariant_factors_as<long long>(m);
  } catch (const Overflow&) {
    return invariant_factors_as<Integer>(m);
  }
}

HomologySummary integer_homology(const SimplicialComplex& c) {
  HomologySummary out;
  if (c.empty()) return out;
  auto fv = f_vector(c);
  auto mats = boundary_matrices(c);
  const std::size_t n = fv.size();
  std::vector<std::vector<Integer>> factors(n + 1);
  out.ranks.assign(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    factors[k] = invariant_factors(mats[k - 1]);
    out.ranks[k] = factors[k].size();
  }
  out.groups.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t rank_next = k + 1 < n ? out.ranks[k + 1] : 0;
    out.groups[k].betti = fv[k] - out.ranks[k] - rank_next;
    for (const auto& d : factors[k + 1])
      if (d > 1) out.groups[k].torsion.push_back(d);
    std::sort(out.groups[k].torsion.begin(), out.groups[k].torsion.end());
  }
  return out;
}

std::string HomologySummary::to_string() const {
  std::ostringstream s;
  s << "(";
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (k) s << ", ";
    std::vector<std::string> parts;
    if (groups[k].betti == 1) parts.push_back("Z");
    else if (groups[k].betti > 1) parts.push_back("Z^" + std::to_string(groups[k].betti));
    for (const auto& t : groups[k].torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) s << "0";
    for (std::size_t i = 0; i < parts.size(); ++i) s << (i ? " + " : "") << parts[i];
  }
  s << ")";
  return s.str();
}

long homology_euler_characteristic(const HomologySummary& h) {
  long chi = 0;
  for (std::size_t k = 0; k < h.groups.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(h.groups[k].betti);
  return chi;
}

}  // namespace cspoly
