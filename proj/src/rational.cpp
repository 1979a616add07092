#include "temper/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace temper {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + text);
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

double rat_approx(const Rat& q) { return q.get_d(); }

RatVec rat_vec(std::initializer_list<long> entries) {
  RatVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec vsum(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vsum: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vdiff(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vdiff: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vneg(const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RatVec vscale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vzero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

int vcompare(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string vec_str(const RatVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(a[i]);
  }
  os << ")";
  return os.str();
}

namespace {

// Reduces rows in place to row echelon form; returns pivot column per row.
std::vector<int> echelon(std::vector<RatVec>& rows, std::vector<RatVec>* rhs) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    if (rhs) std::swap((*rhs)[sel], (*rhs)[r]);
    Rat inv = 1 / rows[r][c];
    rows[r] = vscale(inv, rows[r]);
    if (rhs) (*rhs)[r] = vscale(inv, (*rhs)[r]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      rows[i] = vdiff(rows[i], vscale(f, rows[r]));
      if (rhs) (*rhs)[i] = vdiff((*rhs)[i], vscale(f, (*rhs)[r]));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVec> solve_linear(std::vector<RatVec> rows, RatVec rhs) {
  if (rows.size() != rhs.size())
    throw std::invalid_argument("solve_linear: shape mismatch");
  if (rows.empty()) return RatVec{};
  size_t ncols = rows[0].size();
  std::vector<RatVec> rhs_cols(rhs.size());
  for (size_t i = 0; i < rhs.size(); ++i) rhs_cols[i] = {rhs[i]};
  std::vector<int> pivots = echelon(rows, &rhs_cols);
  RatVec x(ncols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs_cols[i][0];
  for (size_t i = pivots.size(); i < rows.size(); ++i)
    if (rhs_cols[i][0] != 0) return std::nullopt;
  return x;
}

std::vector<RatVec> null_space(const std::vector<RatVec>& rows_in) {
  std::vector<RatVec> rows = rows_in;
  if (rows.empty()) return {};
  size_t ncols = rows[0].size();
  std::vector<int> pivots = echelon(rows, nullptr);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (size_t free_c = 0; free_c < ncols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(ncols, Rat(0));
    v[free_c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -rows[i][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

int matrix_rank(std::vector<RatVec> rows) {
  return static_cast<int>(echelon(rows, nullptr).size());
}

std::vector<RatVec> invert_matrix(const std::vector<RatVec>& rows_in) {
  size_t n = rows_in.size();
  std::vector<RatVec> rows = rows_in;
  std::vector<RatVec> id(n, RatVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::vector<int> pivots = echelon(rows, &id);
  if (pivots.size() != n)
    throw std::invalid_argument("invert_matrix: singular matrix");
  return id;
}

}  // namespace temper
