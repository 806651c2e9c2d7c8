#ifndef WPRM_MONOMIAL_HPP
#define WPRM_MONOMIAL_HPP

#include <span>
#include <vector>

#include "wprm/points.hpp"
#include "wprm/weights.hpp"

namespace wprm {

// exponent vector, projective (m+1 entries) or affine (m entries)
using Expo = std::vector<long long>;

long long wdeg(const Expo& e, const WeightVector& w);

// |{alpha in N^k : sum w_i alpha_i = d}| = dim of the degree-d graded piece
long long denumerant(long long d, const WeightVector& w);

// total order: weighted degree first, ties broken reading exponents from
// index m down to 0, larger exponent at the first difference = larger
int monomial_compare(const Expo& a, const Expo& b, const WeightVector& w);

// all exponent vectors of weighted degree exactly d, ascending
std::vector<Expo> monomials_of_degree(long long d, const WeightVector& w);
// all exponent vectors of weighted degree <= d, ascending
std::vector<Expo> monomials_up_to_degree(long long d, const WeightVector& w);

// x^alpha - x^beta lies in the vanishing ideal of P(w)(F_q): equal weighted
// degree, equal supports, componentwise difference divisible by q-1
bool equivalent_mod_ideal(const Expo& alpha, const Expo& beta, int q, const WeightVector& w);

// reduce positive exponents into [1, q-1]; evaluations on the grid unchanged
Expo affine_reduce(const Expo& e, int q);

// affine exponents with sum w_i alpha_i <= d and = d (mod w0)
std::vector<Expo> congruence_monomials(long long d, int w0, const WeightVector& wtail);

// per-class minima of M_d modulo the vanishing ideal, certified against the
// rank of the evaluation matrix
std::vector<Expo> reduced_monomials(const Field& F, long long d, const WeightVector& w,
                                    const RepresentativeSet* reps = nullptr);

// key identifying the equivalence class of a degree-d monomial: -1 outside
// the support, exponent mod q-1 on it
std::vector<long long> class_key(const Expo& e, int q);

fe eval_monomial(const Field& F, const Expo& e, std::span<const fe> point);
// evaluation at every point of the array; out must hold pts.size() entries
void eval_monomial_row(const Field& F, const Expo& e, const PointArray& pts, fe* out);

nlohmann::json expos_to_json(const std::vector<Expo>& v);

}  // namespace wprm

#endif
