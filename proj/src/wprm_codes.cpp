#include "wprm/wprm_codes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wprm {

namespace {

fe dot(const Field& F, const fe* a, const fe* b, size_t n) {
    fe s = 0;
    for (size_t i = 0; i < n; ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

// distinct affine-reduced evaluation representatives of a monomial list
std::vector<Expo> dedupe_affine(const std::vector<Expo>& monos, int q) {
    std::set<Expo> seen;
    std::vector<Expo> out;
    for (const auto& e : monos) {
        Expo r = affine_reduce(e, q);
        if (seen.insert(r).second) out.push_back(e);
    }
    return out;
}

std::string case_name(WprsCase c) {
    switch (c) {
        case WprsCase::both_divide: return "both-divide";
        case WprsCase::one_divides: return "one-divides";
        case WprsCase::neither_divides: return "neither-divides";
    }
    return "";
}

}  // namespace

LinearCode eval_code(const Field& F, const std::vector<Expo>& monomials, const PointArray& pts,
                     std::string label) {
    Mat rows(F, monomials.size(), pts.size());
    for (size_t i = 0; i < monomials.size(); ++i)
        eval_monomial_row(F, monomials[i], pts, rows.row(i));
    return LinearCode::from_rows(std::move(rows), std::move(label));
}

bool is_nondegenerate(const WeightVector& w, long long d) { return d % w.lcm() == 0; }

WprmCode build_wprm(const Field& F, const WeightVector& w, long long d, Layout layout,
                    std::shared_ptr<const RepresentativeSet> reps) {
    if (d < 0) throw precondition_error("wprm degree must be >= 0");
    WprmCode C;
    C.F = &F;
    C.w = w;
    C.d = d;
    C.reps = reps ? std::move(reps)
                  : std::make_shared<const RepresentativeSet>(enumerate_points(F, w, layout));
    C.code = eval_code(F, monomials_of_degree(d, w), C.reps->pts);
    C.nondegenerate = is_nondegenerate(w, d);
    return C;
}

LinearCode build_wrm(const Field& F, const WeightVector& wtail, long long d,
                     const AffineGrid& grid) {
    if (d < 0) return LinearCode::zero(F, grid.pts.size());
    auto monos = dedupe_affine(monomials_up_to_degree(d, wtail), F.q());
    return eval_code(F, monos, grid.pts);
}

LinearCode build_wrm_congruence(const Field& F, int w0, const WeightVector& wtail, long long d,
                                const AffineGrid& grid) {
    if (d < 0) return LinearCode::zero(F, grid.pts.size());
    auto monos = dedupe_affine(congruence_monomials(d, w0, wtail), F.q());
    return eval_code(F, monos, grid.pts);
}

fe LambdaVectors::value(const Field& F, int i, size_t j) const {
    RadicalScalar rs = entry(F, i, j);
    if (rs.r == 0) return rs.a;
    if (dead[j]) return 1;  // unconstrained: every degree-d evaluation vanishes here
    throw lambda_field_error("lambda power outside GF(q) at a live point (g = " +
                             std::to_string(info[j].g) + ", d = " + std::to_string(d) + ")");
}

LambdaVectors make_lambda_vectors(const Field& F, const RepresentativeSet& structured,
                                  long long d) {
    if (structured.layout != Layout::structured)
        throw precondition_error("lambda vectors need the structured layout");
    LambdaVectors L;
    L.q = F.q();
    L.d = d;
    L.info = structured.base_lambda;
    size_t nb = structured.base.size();

    // a base point is dead when every degree-d tail monomial vanishes on it
    WeightVector wt = structured.w.tail();
    auto tail_monos = monomials_of_degree(d, wt);
    std::vector<char> live(nb, 0);
    std::vector<fe> row(nb);
    for (const auto& e : tail_monos) {
        eval_monomial_row(F, e, structured.base, row.data());
        for (size_t j = 0; j < nb; ++j) live[j] |= (row[j] != 0);
    }
    L.dead.resize(nb);
    for (size_t j = 0; j < nb; ++j) L.dead[j] = !live[j];

    for (int i = 1; i <= L.q - 1; ++i)
        for (size_t j = 0; j < nb; ++j)
            if (L.entry(F, i, j).r != 0) ++L.symbolic_entries;
    return L;
}

nlohmann::json LambdaVectors::to_json(const Field& F) const {
    nlohmann::json j;
    j["d"] = d;
    j["symbolic_entries"] = symbolic_entries;
    j["dead_points"] = std::count(dead.begin(), dead.end(), char(1));
    nlohmann::json vecs = nlohmann::json::array();
    for (int i = 1; i <= q - 1; ++i) {
        nlohmann::json vi = nlohmann::json::array();
        for (size_t k = 0; k < info.size(); ++k) {
            RadicalScalar rs = entry(F, i, k);
            vi.push_back({{"g", rs.g}, {"r", rs.r}, {"a", int(rs.a)},
                          {"in_base_field", rs.in_base_field()}});
        }
        vecs.push_back(std::move(vi));
    }
    j["vectors"] = std::move(vecs);
    return j;
}

Decomposition recursive_decomposition(const Field& F, const WeightVector& w, long long d) {
    if (d < 1) throw precondition_error("recursive decomposition needs d >= 1");
    auto reps = std::make_shared<const RepresentativeSet>(structured_representatives(F, w));
    const RepresentativeSet& R = *reps;
    int q = F.q();
    size_t pm1 = R.base.size();
    size_t qm = size_t(R.size()) - pm1;  // affine part size q^m

    Decomposition D;
    D.w = w;
    D.d = d;
    D.reps = reps;
    D.direct = build_wprm(F, w, d, Layout::structured, reps).code;

    AffineGrid grid = AffineGrid::from_structured(F, R);
    WeightVector wt = w.tail();
    D.congruence_part = build_wrm_congruence(F, w[0], wt, d - w[0], grid);
    auto tail_monos = monomials_of_degree(d, wt);
    D.tail_part = eval_code(F, tail_monos, R.base);
    D.lambda = make_lambda_vectors(F, R, d);

    // cross-check the two v_Lambda routes on the monomial basis: the star
    // products against the direct evaluation at the shifted representatives
    D.lambda_routes_agree = true;
    {
        std::vector<fe> v(pm1), shifted(pm1);
        for (const auto& e : tail_monos) {
            eval_monomial_row(F, e, R.base, v.data());
            for (int i = 2; i <= q - 1; ++i) {
                const Block& blk = R.blocks[i - 1];
                PointArray bpts(R.base.dim());
                for (size_t j = 0; j < pm1; ++j) bpts.push_back(R.pts[blk.offset + j].subspan(1));
                eval_monomial_row(F, e, bpts, shifted.data());
                for (size_t j = 0; j < pm1; ++j) {
                    fe star = v[j] == 0 ? fe(0) : F.mul(D.lambda.value(F, i, j), v[j]);
                    if (star != shifted[j]) D.lambda_routes_agree = false;
                }
            }
        }
    }

    // assemble {(u, 0)} and {(v_Lambda, v)} from the component bases
    Mat rows(F, 0, R.size());
    std::vector<fe> full(R.size());
    for (size_t r = 0; r < D.congruence_part.dim(); ++r) {
        const fe* u = D.congruence_part.gen().row(r);
        std::fill(full.begin(), full.end(), fe(0));
        std::copy(u, u + qm, full.begin());
        rows.append_row(full);
    }
    for (size_t r = 0; r < D.tail_part.dim(); ++r) {
        const fe* v = D.tail_part.gen().row(r);
        std::fill(full.begin(), full.end(), fe(0));
        for (int i = 1; i <= q - 1; ++i)
            for (size_t j = 0; j < pm1; ++j)
                full[(size_t(i) - 1) * pm1 + j] =
                    v[j] == 0 ? fe(0) : F.mul(D.lambda.value(F, i, j), v[j]);
        // origin coordinate stays zero; infinity block carries v itself
        std::copy(v, v + pm1, full.begin() + qm);
        rows.append_row(full);
    }
    D.assembled = LinearCode::from_rows(std::move(rows));
    D.equal = D.assembled == D.direct;
    D.dims_add = D.direct.dim() == D.congruence_part.dim() + D.tail_part.dim();
    return D;
}

DualDecomposition dual_recursive(const Field& F, const WeightVector& w, long long d) {
    if (d < 1) throw precondition_error("dual recursion needs d >= 1");
    auto reps = std::make_shared<const RepresentativeSet>(structured_representatives(F, w));
    const RepresentativeSet& R = *reps;
    int q = F.q();
    size_t pm1 = R.base.size();
    size_t qm = size_t(R.size()) - pm1;

    DualDecomposition D;
    D.w = w;
    D.d = d;
    WprmCode primal = build_wprm(F, w, d, Layout::structured, reps);
    D.direct_dual = primal.code.dual();

    AffineGrid grid = AffineGrid::from_structured(F, R);
    WeightVector wt = w.tail();
    LinearCode cong = build_wrm_congruence(F, w[0], wt, d - w[0], grid);
    LinearCode tail = eval_code(F, monomials_of_degree(d, wt), R.base);
    D.congruence_dual = cong.dual();
    D.tail_dual = tail.dual();
    D.lambda = make_lambda_vectors(F, R, d);

    Mat rows(F, 0, R.size());
    std::vector<fe> full(R.size());
    for (size_t r = 0; r < D.congruence_dual.dim(); ++r) {
        const fe* ut = D.congruence_dual.gen().row(r);
        std::fill(full.begin(), full.end(), fe(0));
        std::copy(ut, ut + qm, full.begin());
        // u_Lambda^t = sum_i Lambda(i) * u_i^t over the affine blocks
        for (size_t j = 0; j < pm1; ++j) {
            fe acc = 0;
            for (int i = 1; i <= q - 1; ++i) {
                fe uij = ut[(size_t(i) - 1) * pm1 + j];
                if (uij == 0) continue;
                RadicalScalar rs = D.lambda.entry(F, i, j);
                if (rs.r != 0 && D.lambda.dead[j]) ++D.conventional_products;
                acc = F.add(acc, F.mul(D.lambda.value(F, i, j), uij));
            }
            full[qm + j] = F.neg(acc);
        }
        rows.append_row(full);
    }
    for (size_t r = 0; r < D.tail_dual.dim(); ++r) {
        const fe* vt = D.tail_dual.gen().row(r);
        std::fill(full.begin(), full.end(), fe(0));
        std::copy(vt, vt + pm1, full.begin() + qm);
        rows.append_row(full);
    }

    // every assembled row must pair to zero with every primal generator
    D.orthogonal = true;
    for (size_t r = 0; r < rows.rows(); ++r)
        for (size_t s = 0; s < primal.code.dim(); ++s)
            if (dot(F, rows.row(r), primal.code.gen().row(s), R.size()) != 0)
                D.orthogonal = false;

    D.assembled = LinearCode::from_rows(std::move(rows));
    D.equal = D.assembled == D.direct_dual;
    return D;
}

SscReport ssc_recursive(const Field& F, const Field& Fsub, const WeightVector& w, long long d) {
    SscReport S;
    S.w = w;
    S.d = d;
    S.q = F.q();
    S.qprime = Fsub.q();
    SubfieldEmbedding emb(F, Fsub);

    long long base = (long long)(F.q() - 1) * w.lcm();
    if (base % (Fsub.q() - 1) != 0)
        throw consistency_error("subfield degree step is not integral");
    base /= Fsub.q() - 1;
    S.degree_qualifies = d > 0 && d % base == 0;
    if (!S.degree_qualifies) return S;

    auto reps = std::make_shared<const RepresentativeSet>(structured_representatives(F, w));
    const RepresentativeSet& R = *reps;
    int q = F.q();
    size_t pm1 = R.base.size();
    size_t qm = size_t(R.size()) - pm1;

    WprmCode direct = build_wprm(F, w, d, Layout::structured, reps);
    LinearCode lhs = direct.code.subfield_subcode(Fsub);
    S.dim_lhs = lhs.dim();

    AffineGrid grid = AffineGrid::from_structured(F, R);
    WeightVector wt = w.tail();
    LinearCode cong = build_wrm_congruence(F, w[0], wt, d - w[0], grid);
    LinearCode tail = eval_code(F, monomials_of_degree(d, wt), R.base);
    LinearCode cong_sub = cong.subfield_subcode(Fsub);
    LinearCode tail_sub = tail.subfield_subcode(Fsub);
    S.dim_u = cong_sub.dim();
    S.dim_v = tail_sub.dim();

    LambdaVectors lambda = make_lambda_vectors(F, R, d);
    S.lambda_in_subfield = true;
    for (int i = 1; i <= q - 1; ++i)
        for (size_t j = 0; j < pm1; ++j) {
            if (lambda.dead[j]) continue;
            if (!emb.project(lambda.value(F, i, j)).has_value()) S.lambda_in_subfield = false;
        }

    Mat rows(Fsub, 0, R.size());
    std::vector<fe> full(R.size());
    for (size_t r = 0; r < cong_sub.dim(); ++r) {
        const fe* u = cong_sub.gen().row(r);
        std::fill(full.begin(), full.end(), fe(0));
        std::copy(u, u + qm, full.begin());
        rows.append_row(full);
    }
    for (size_t r = 0; r < tail_sub.dim(); ++r) {
        const fe* v = tail_sub.gen().row(r);
        std::fill(full.begin(), full.end(), fe(0));
        for (int i = 1; i <= q - 1; ++i)
            for (size_t j = 0; j < pm1; ++j) {
                if (v[j] == 0) continue;
                fe prod = F.mul(lambda.value(F, i, j), emb.embed(v[j]));
                auto down = emb.project(prod);
                if (!down) throw lambda_field_error("subfield assembly left the subfield");
                full[(size_t(i) - 1) * pm1 + j] = *down;
            }
        std::copy(v, v + pm1, full.begin() + qm);
        rows.append_row(full);
    }
    LinearCode assembled = LinearCode::from_rows(std::move(rows));
    S.equal = assembled == lhs;
    S.dims_add = S.dim_lhs == S.dim_u + S.dim_v;
    return S;
}

GcdTransformReport transform_gcd(const Field& F, const WeightVector& w, long long d) {
    GcdTransformReport r;
    GcdReduction red = gcd_reduce(w, d);
    r.gamma = red.gamma;
    WprmCode original = build_wprm(F, w, d, Layout::canonical);
    r.dim = original.code.dim();
    if (red.zero) {
        r.zero_case = true;
        r.equal = original.code.dim() == 0;
        return r;
    }
    RepresentativeSet reduced_reps = enumerate_points(F, red.w, Layout::canonical);
    if (!(reduced_reps.pts.flat() == original.reps->pts.flat()))
        throw consistency_error("gcd reduction changed the representative points");
    LinearCode reduced = eval_code(F, monomials_of_degree(red.d, red.w), reduced_reps.pts);
    r.equal = original.code == reduced;
    return r;
}

DelormeTransformReport transform_delorme(const Field& F, const WeightVector& w, long long d) {
    DelormeTransformReport r;
    r.red = delorme_reduce(w, d);
    WprmCode lhs = build_wprm(F, w, d, Layout::canonical);
    const RepresentativeSet& R = *lhs.reps;

    if (r.red.d0 < 0) {
        r.zero_case = true;
        r.equal = lhs.code.dim() == 0;
        r.point_map_bijective = true;
        return r;
    }

    PointArray image(w.size());
    std::set<Point> orbits;
    for (size_t i = 0; i < R.size(); ++i) {
        Point img = delorme_map(F, r.red, R.point(i));
        orbits.insert(orbit_canonical(F, r.red.reduced, img));
        image.push_back(img);
    }
    r.point_map_bijective = orbits.size() == R.size();

    r.multiplier.resize(R.size());
    for (size_t i = 0; i < R.size(); ++i) r.multiplier[i] = F.pow(R.point(i)[0], r.red.alpha0);

    auto reduced_monos = monomials_of_degree(r.red.d0, r.red.reduced);
    Mat rows(F, reduced_monos.size(), R.size());
    for (size_t i = 0; i < reduced_monos.size(); ++i) {
        eval_monomial_row(F, reduced_monos[i], image, rows.row(i));
        for (size_t c = 0; c < R.size(); ++c) rows.at(i, c) = F.mul(rows.at(i, c), r.multiplier[c]);
    }
    r.equal = lhs.code == LinearCode::from_rows(std::move(rows));
    return r;
}

DelormeNondivReport transform_delorme_nondivisible(const Field& F, const WeightVector& w,
                                                   long long d) {
    DelormeNondivReport r;
    DelormeReduction red = delorme_reduce(w, d);
    if (red.gamma == 1 || d % red.gamma == 0) {
        r.note = red.gamma == 1 ? "gcd(w') = 1: not applicable" : "gcd(w') divides d: not applicable";
        return r;
    }
    r.applicable = true;
    auto reps = std::make_shared<const RepresentativeSet>(structured_representatives(F, w));
    const RepresentativeSet& R = *reps;
    size_t pm1 = R.base.size();
    size_t qm = size_t(R.size()) - pm1;
    WprmCode direct = build_wprm(F, w, d, Layout::structured, reps);

    AffineGrid grid = AffineGrid::from_structured(F, R);
    WeightVector wt = w.tail();
    auto product_code = [&](const LinearCode& affine) {
        Mat rows(F, 0, R.size());
        std::vector<fe> full(R.size());
        for (size_t i = 0; i < affine.dim(); ++i) {
            std::fill(full.begin(), full.end(), fe(0));
            const fe* u = affine.gen().row(i);
            std::copy(u, u + qm, full.begin());
            rows.append_row(full);
        }
        return LinearCode::from_rows(std::move(rows));
    };
    LinearCode cong = build_wrm_congruence(F, w[0], wt, d - w[0], grid);
    r.product_equal = direct.code == product_code(cong);

    WeightVector wt_red = red.reduced.tail();
    LinearCode cong_red = build_wrm_congruence(F, w[0], wt_red, red.d0, grid);
    r.reduced_equal = direct.code == product_code(cong_red);
    return r;
}

WprsParams wprs_params(int q, int w0, int w1, long long d) {
    if (std::gcd(w0, w1) != 1) throw precondition_error("WPRS weights must be coprime");
    if (d < 1) throw precondition_error("WPRS degree must be >= 1");
    WprsParams P;
    P.q = q;
    P.w0 = w0;
    P.w1 = w1;
    P.d = d;
    WeightVector w{w0, w1};
    P.delta = denumerant(d, w) - 1;
    P.zero_code = P.delta < 0;
    long long ww = (long long)w0 * w1;
    P.rho = d % ww;
    bool div0 = d % w0 == 0, div1 = d % w1 == 0;
    if (div0 && div1)
        P.kase = WprsCase::both_divide;
    else if (div0 || div1)
        P.kase = WprsCase::one_divides;
    else
        P.kase = WprsCase::neither_divides;
    P.eps_tilde = P.kase == WprsCase::neither_divides ? denumerant(P.rho, w) : 0;
    P.predicted_d1 = std::max((long long)q - (d - 1) / ww - P.eps_tilde, 1ll);
    return P;
}

namespace {

// expected zero columns: unit-support points whose weight does not divide d
std::vector<int> expected_zero_cols(const RepresentativeSet& R, long long d) {
    std::vector<int> cols;
    for (size_t i = 0; i < R.size(); ++i) {
        auto P = R.point(i);
        int supp = -1, count = 0;
        for (size_t j = 0; j < P.size(); ++j)
            if (P[j] != 0) {
                supp = int(j);
                ++count;
            }
        if (count == 1 && d % R.w[supp] != 0) cols.push_back(int(i));
    }
    return cols;
}

bool hierarchy_is_mds(const LinearCode& C) {
    if (C.dim() == 0) return true;
    auto h = C.hierarchy();
    for (size_t r = 1; r <= C.dim(); ++r)
        if (h[r - 1] != (long long)C.n() - (long long)C.dim() + (long long)r) return false;
    return true;
}

// the classical identification psi([Q0 : Q1]) = (Q0^{w1}, Q1^{w0}) of
// P(w0, w1) with P^1; gives the matched representatives for PRS comparison
PointArray psi_points(const Field& F, const RepresentativeSet& R, int w0, int w1) {
    PointArray out(2);
    for (size_t i = 0; i < R.size(); ++i) {
        auto P = R.point(i);
        Point img{F.pow(P[0], w1), F.pow(P[1], w0)};
        out.push_back(img);
    }
    return out;
}

bool psi_is_representative_set(const Field& F, const PointArray& pts) {
    WeightVector ones{1, 1};
    std::set<Point> orbits;
    for (size_t i = 0; i < pts.size(); ++i) orbits.insert(orbit_canonical(F, ones, pts[i]));
    return orbits.size() == pts.size();
}

// dimension of the Reed-Solomon model behind each case: the monomials
// 1, z, ..., z^delta collapse modulo the evaluation-set relations
long long wprs_model_dim(const Field& F, const WprsParams& P) {
    if (P.zero_code) return 0;
    long long q = F.q();
    switch (P.kase) {
        case WprsCase::both_divide: {
            // rank of the PRS model itself
            WeightVector ones{1, 1};
            RepresentativeSet R = enumerate_points(F, ones);
            return (long long)eval_code(F, monomials_of_degree(P.delta, ones), R.pts).dim();
        }
        case WprsCase::one_divides:
            return std::min(P.delta + 1, q);  // distinct powers on F_q
        case WprsCase::neither_divides:
            return std::min(P.delta + 1, q - 1);  // distinct powers on F_q^*
    }
    return 0;
}

}  // namespace

WprsReport wprs_check(const Field& F, int w0, int w1, long long d) {
    WprsReport rep;
    rep.params = wprs_params(F.q(), w0, w1, d);
    WeightVector w{w0, w1};
    WprmCode C = build_wprm(F, w, d, Layout::canonical);
    const RepresentativeSet& R = *C.reps;
    rep.dim = C.code.dim();
    rep.dim_ok = (long long)rep.dim == wprs_model_dim(F, rep.params);

    auto expect = expected_zero_cols(R, d);
    std::vector<int> zero_cols;
    auto supp = C.code.support();
    std::vector<char> in_supp(R.size(), 0);
    for (int c : supp) in_supp[c] = 1;
    for (size_t c = 0; c < R.size(); ++c)
        if (!in_supp[c]) zero_cols.push_back(int(c));
    rep.zero_pattern_ok = rep.params.zero_code || zero_cols == expect;

    if (rep.params.zero_code) {
        rep.punctured_mds = true;
        rep.case1_prs_equal = true;
        return rep;
    }

    rep.punctured_mds = hierarchy_is_mds(C.code.punctured(supp));

    if (rep.params.kase == WprsCase::both_divide) {
        PointArray img = psi_points(F, R, w0, w1);
        rep.case1_prs_equal = psi_is_representative_set(F, img) &&
                              C.code == eval_code(F, monomials_of_degree(rep.params.delta,
                                                                         WeightVector{1, 1}),
                                                  img);
    }

    rep.brute_d1 = C.code.min_distance();
    rep.d1_ok = rep.brute_d1 == rep.params.predicted_d1;
    return rep;
}

WprsDualReport wprs_dual_structure(const Field& F, int w0, int w1, long long d) {
    WprsDualReport rep;
    rep.params = wprs_params(F.q(), w0, w1, d);
    WeightVector w{w0, w1};
    WprmCode C = build_wprm(F, w, d, Layout::canonical);
    const RepresentativeSet& R = *C.reps;
    LinearCode dual = C.code.dual();

    rep.dim_ok = (long long)dual.dim() == (long long)R.size() - wprs_model_dim(F, rep.params);

    rep.units_ok = true;
    for (int c : expected_zero_cols(R, d)) {
        std::vector<fe> unit(R.size(), 0);
        unit[c] = 1;
        if (!dual.contains(unit)) rep.units_ok = false;
    }

    auto supp = C.code.support();
    if (C.code.dim() == 0 || supp.empty())
        rep.punctured_dual_mds = true;
    else
        rep.punctured_dual_mds = hierarchy_is_mds(C.code.punctured(supp).dual());

    if (rep.params.kase == WprsCase::both_divide && !rep.params.zero_code) {
        PointArray img = psi_points(F, R, w0, w1);
        long long dperp = (long long)F.q() - 1 - rep.params.delta;
        LinearCode prs = dperp < 0
                             ? LinearCode::zero(F, R.size())
                             : eval_code(F, monomials_of_degree(dperp, WeightVector{1, 1}), img);
        rep.case1_equal = psi_is_representative_set(F, img) && dual == prs;
    }
    return rep;
}

CovarianceReport representative_covariance(const Field& F, const WeightVector& w, long long d) {
    CovarianceReport rep;
    RepresentativeSet R = enumerate_points(F, w, Layout::canonical);
    auto monos = monomials_of_degree(d, w);

    Mat base(F, monos.size(), R.size());
    for (size_t i = 0; i < monos.size(); ++i) eval_monomial_row(F, monos[i], R.pts, base.row(i));

    // shift every point by its lambda_Q and evaluate again
    PointArray shifted(w.size());
    for (size_t i = 0; i < R.size(); ++i) {
        auto P = R.point(i);
        int g = support_gcd(w, P);
        Point S(P.begin(), P.end());
        for (size_t j = 0; j < S.size(); ++j)
            if (S[j] != 0) S[j] = F.mul(S[j], F.exp(w[int(j)] / g));
        shifted.push_back(S);
    }
    Mat shifted_ev(F, monos.size(), R.size());
    for (size_t i = 0; i < monos.size(); ++i)
        eval_monomial_row(F, monos[i], shifted, shifted_ev.row(i));

    rep.ok = true;
    for (size_t c = 0; c < R.size(); ++c) {
        bool dead = true;
        for (size_t i = 0; i < monos.size() && dead; ++i) dead = base.at(i, c) == 0;
        RadicalScalar rs = lambda_for(F, w, R.point(c)).power(F, d);
        fe diag = 1;
        if (rs.r == 0) {
            diag = rs.a;
            rep.diagonal.push_back(std::to_string(int(diag)));
        } else if (dead) {
            ++rep.dead_points;
            rep.diagonal.push_back("dead");
        } else {
            throw lambda_field_error("lambda^d outside GF(q) at a live point");
        }
        for (size_t i = 0; i < monos.size(); ++i) {
            fe expect = dead ? fe(0) : F.mul(diag, base.at(i, c));
            if (shifted_ev.at(i, c) != expect) rep.ok = false;
        }
    }
    return rep;
}

DeltaReport compare_delta(const Field& F, const WeightVector& w, long long d) {
    if (w[0] != 1) throw precondition_error("delta comparison requires w_0 = 1");
    WeightVector wt = w.tail();
    int w1 = *std::min_element(wt.w.begin(), wt.w.end());
    if (d % w1 != 0) throw precondition_error("delta comparison requires min(w') | d");
    if (d >= F.q()) throw precondition_error("delta comparison requires d < q");

    DeltaReport rep;
    AffineGrid grid = AffineGrid::lex(F, wt.size());
    LinearCode wrm = build_wrm(F, wt, d, grid);
    WprmCode wprm = build_wprm(F, w, d, Layout::canonical);
    rep.dim_wrm = wrm.dim();
    rep.dim_wprm = wprm.code.dim();
    rep.d1_wrm = wrm.min_distance();
    rep.d1_wprm = wprm.code.min_distance();
    rep.delta_wrm = Rational((long long)rep.dim_wrm + rep.d1_wrm, (long long)wrm.n());
    rep.delta_wprm = Rational((long long)rep.dim_wprm + rep.d1_wprm, (long long)wprm.code.n());
    long long qpow = 1;
    for (int i = 0; i < w.m() - 1; ++i) qpow *= F.q();
    rep.sufficient_condition = denumerant(d, w) <= qpow * (d / w1 - 1);
    rep.comparison_holds = rep.delta_wrm < rep.delta_wprm;
    return rep;
}

// ---- json ----

nlohmann::json WprmCode::to_json() const {
    nlohmann::json j = code.to_json();
    j["w"] = w.w;
    j["d"] = d;
    switch (reps->layout) {
        case Layout::canonical: j["layout"] = "canonical"; break;
        case Layout::standard: j["layout"] = "standard"; break;
        case Layout::structured: j["layout"] = "structured"; break;
    }
    j["nondegenerate"] = nondegenerate;
    return j;
}

nlohmann::json Decomposition::to_json() const {
    return {{"w", w.w},
            {"d", d},
            {"dim", direct.dim()},
            {"dim_congruence", congruence_part.dim()},
            {"dim_tail", tail_part.dim()},
            {"equal", equal},
            {"dims_add", dims_add},
            {"lambda_routes_agree", lambda_routes_agree},
            {"lambda_symbolic_entries", lambda.symbolic_entries}};
}

nlohmann::json DualDecomposition::to_json() const {
    return {{"w", w.w},
            {"d", d},
            {"dim_dual", direct_dual.dim()},
            {"equal", equal},
            {"orthogonal", orthogonal},
            {"conventional_products", conventional_products}};
}

nlohmann::json SscReport::to_json() const {
    return {{"w", w.w},          {"d", d},
            {"q", q},            {"qprime", qprime},
            {"qualifies", degree_qualifies}, {"lambda_in_subfield", lambda_in_subfield},
            {"dim", dim_lhs},    {"dim_u", dim_u},
            {"dim_v", dim_v},    {"equal", equal},
            {"dims_add", dims_add}};
}

nlohmann::json GcdTransformReport::to_json() const {
    return {{"gamma", gamma}, {"zero_case", zero_case}, {"equal", equal}, {"dim", dim}};
}

nlohmann::json DelormeTransformReport::to_json() const {
    return {{"gamma", red.gamma},
            {"alpha0", red.alpha0},
            {"d0", red.d0},
            {"reduced_w", red.reduced.w},
            {"zero_case", zero_case},
            {"bijective", point_map_bijective},
            {"equal", equal}};
}

nlohmann::json DelormeNondivReport::to_json() const {
    return {{"applicable", applicable},
            {"note", note},
            {"product_equal", product_equal},
            {"reduced_equal", reduced_equal}};
}

nlohmann::json WprsParams::to_json() const {
    return {{"q", q},
            {"w0", w0},
            {"w1", w1},
            {"d", d},
            {"delta", delta},
            {"rho", rho},
            {"eps_tilde", eps_tilde},
            {"case", case_name(kase)},
            {"predicted_d1", predicted_d1},
            {"zero_code", zero_code}};
}

nlohmann::json WprsReport::to_json() const {
    nlohmann::json j = params.to_json();
    j["dim"] = dim;
    j["dim_ok"] = dim_ok;
    j["zero_pattern_ok"] = zero_pattern_ok;
    j["punctured_mds"] = punctured_mds;
    j["case1_prs_equal"] = case1_prs_equal;
    j["brute_d1"] = brute_d1;
    j["d1_ok"] = d1_ok;
    return j;
}

nlohmann::json WprsDualReport::to_json() const {
    nlohmann::json j = params.to_json();
    j["dim_ok"] = dim_ok;
    j["units_ok"] = units_ok;
    j["punctured_dual_mds"] = punctured_dual_mds;
    j["case1_equal"] = case1_equal;
    return j;
}

nlohmann::json CovarianceReport::to_json() const {
    return {{"ok", ok}, {"dead_points", dead_points}, {"diagonal", diagonal}};
}

nlohmann::json DeltaReport::to_json() const {
    return {{"sufficient_condition", sufficient_condition},
            {"comparison_holds", comparison_holds},
            {"delta_wrm", delta_wrm.to_json()},
            {"delta_wprm", delta_wprm.to_json()},
            {"d1_wrm", d1_wrm},
            {"d1_wprm", d1_wprm}};
}

}  // namespace wprm
