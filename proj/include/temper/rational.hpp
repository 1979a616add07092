#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace temper {

// Exact rational scalar backed by GMP. All arithmetic in the engine is
// exact; doubles appear only in pretty-printed output.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

Rat rat(long num, long den = 1);

// Accepts "n", "-n" and "n/d"; throws std::invalid_argument on anything
// else. Infinite values are not rationals and are handled by callers.
Rat parse_rat(const std::string& text);

// "num/den", with "/den" omitted when the denominator is 1.
std::string rat_str(const Rat& q);
double rat_approx(const Rat& q);

RatVec rat_vec(std::initializer_list<long> entries);
Rat dot(const RatVec& a, const RatVec& b);
RatVec vsum(const RatVec& a, const RatVec& b);
RatVec vdiff(const RatVec& a, const RatVec& b);
RatVec vneg(const RatVec& a);
RatVec vscale(const Rat& c, const RatVec& a);
bool vzero(const RatVec& a);
int vcompare(const RatVec& a, const RatVec& b);
std::string vec_str(const RatVec& a);

struct VecLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    return vcompare(a, b) < 0;
  }
};

// Exact Gaussian elimination. Matrices are row vectors over Q.
std::optional<RatVec> solve_linear(std::vector<RatVec> rows, RatVec rhs);
std::vector<RatVec> null_space(const std::vector<RatVec>& rows);
int matrix_rank(std::vector<RatVec> rows);
std::vector<RatVec> invert_matrix(const std::vector<RatVec>& rows);

}  // namespace temper
