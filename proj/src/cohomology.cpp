#include "nilform/cohomology.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace nilform {

namespace {

std::vector<Blade> blades_of_degree(int n, int k) {
    std::vector<Blade> v;
    for (unsigned b = 0; b < (1u << n); ++b)
        if (__builtin_popcount(b) == k) v.push_back(Blade(b));
    return v;
}

}  // namespace

Matrix<Poly> differential_matrix(const Presentation& p, int k) {
    int n = p.dimension();
    auto src = blades_of_degree(n, k), dst = blades_of_degree(n, k + 1);
    std::map<Blade, size_t> row_of;
    for (size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
    Matrix<RatFunc> m(dst.size(), std::vector<RatFunc>(src.size(), RatFunc(p.ctx()->vars, 0)));
    for (size_t c = 0; c < src.size(); ++c) {
        Form e(p.ctx(), n);
        e.add_term(src[c], CScalar(p.ctx(), 1));
        Form de = differential(p, e);
        for (const auto& [b, v] : de.terms()) m[row_of[b]][c] = v.as_ratfunc();
    }
    // Clear denominators per row: row scaling by a nonzero rational
    // function preserves rank.
    Matrix<Poly> out(dst.size(), std::vector<Poly>(src.size(), Poly(p.ctx()->vars)));
    for (size_t r = 0; r < m.size(); ++r) {
        Poly l(p.ctx()->vars, 1);
        for (const auto& f : m[r])
            if (!f.is_zero()) l = poly_lcm(l, f.den());
        for (size_t c = 0; c < m[r].size(); ++c)
            if (!m[r][c].is_zero()) out[r][c] = m[r][c].num() * exact_div(l, m[r][c].den());
    }
    return out;
}

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

struct RankProfile {
    std::vector<int> rank_d;
    std::vector<Rational> pivot_roots;
};

RankProfile rank_profile(const Presentation& p, const std::string& param) {
    int n = p.dimension();
    RankProfile rp;
    rp.rank_d.assign(size_t(n) + 1, 0);
    std::vector<std::future<BareissResult>> jobs;
    for (int k = 0; k <= n; ++k)
        jobs.push_back(std::async(std::launch::async | std::launch::deferred,
                                  [&p, k] { return bareiss_rank(differential_matrix(p, k)); }));
    for (int k = 0; k <= n; ++k) {
        BareissResult br = jobs[size_t(k)].get();
        rp.rank_d[size_t(k)] = br.rank;
        if (!param.empty())
            for (const Poly& piv : br.pivots)
                for (const Rational& r : positive_rational_roots(piv, param))
                    if (std::find(rp.pivot_roots.begin(), rp.pivot_roots.end(), r) ==
                        rp.pivot_roots.end())
                        rp.pivot_roots.push_back(r);
    }
    std::sort(rp.pivot_roots.begin(), rp.pivot_roots.end());
    return rp;
}

std::vector<int> betti_from_ranks(int n, const std::vector<int>& rank_d) {
    std::vector<int> b(size_t(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        int prev = k == 0 ? 0 : rank_d[size_t(k) - 1];
        b[size_t(k)] = int(binom(n, k)) - rank_d[size_t(k)] - prev;
    }
    return b;
}

}  // namespace

CohomologyReport betti(const Presentation& p, const std::vector<Assignment>& samples) {
    auto rep = check_d_squared(p);
    if (!rep.pass)
        throw std::domain_error("betti: d^2 != 0 (generator " + std::to_string(rep.failures[0].first) +
                                ")");
    int n = p.dimension();
    CohomologyReport out;
    out.generic = p.has_parameters();
    std::string param = out.generic ? p.ctx()->vars->front() : "";
    RankProfile rp = rank_profile(p, param);
    out.rank_d = rp.rank_d;
    out.exceptional_candidates = rp.pivot_roots;
    out.betti = betti_from_ranks(n, out.rank_d);
    for (int k = 0; k <= n; ++k) out.euler += (k % 2 ? -1 : 1) * out.betti[size_t(k)];
    for (const auto& at : samples) {
        Presentation q = p.specialized(at);
        RankProfile sp = rank_profile(q, "");
        SampleCheck sc;
        sc.at = at;
        sc.betti = betti_from_ranks(n, sp.rank_d);
        sc.matches_generic = sc.betti == out.betti;
        out.samples.push_back(std::move(sc));
    }
    return out;
}

std::vector<Form> closed_basis(const Presentation& p, int k) {
    auto rep = check_d_squared(p);
    if (!rep.pass) throw std::domain_error("closed_basis: d^2 != 0");
    int n = p.dimension();
    auto src = blades_of_degree(n, k), dst = blades_of_degree(n, k + 1);
    RatFunc zero(p.ctx()->vars, 0), one(p.ctx()->vars, 1);
    std::vector<Form> basis;
    if (dst.empty()) {
        // top degree: everything is closed
        for (Blade b : src) {
            Form f(p.ctx(), n);
            f.add_term(b, CScalar(p.ctx(), 1));
            basis.push_back(f);
        }
        return basis;
    }
    Matrix<RatFunc> m(dst.size(), std::vector<RatFunc>(src.size(), zero));
    std::map<Blade, size_t> row_of;
    for (size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
    for (size_t c = 0; c < src.size(); ++c) {
        Form e(p.ctx(), n);
        e.add_term(src[c], CScalar(p.ctx(), 1));
        Form de = differential(p, e);
        for (const auto& [b, v] : de.terms()) m[row_of[b]][c] = v.as_ratfunc();
    }
    for (const auto& v : kernel_basis(m, zero, one)) {
        Form f(p.ctx(), n);
        for (size_t c = 0; c < src.size(); ++c)
            if (!v[c].is_zero()) f.add_term(src[c], CScalar::from_ratfunc(p.ctx(), v[c]));
        basis.push_back(f);
    }
    return basis;
}

RepresentativeReport verify_representatives(const Presentation& p, int k,
                                            const std::vector<Form>& reps) {
    RepresentativeReport out;
    for (const Form& r : reps) {
        Form dr = differential(p, r);
        if (!dr.is_zero()) {
            out.pass = false;
            out.not_closed.emplace_back(r, dr);
        }
    }
    if (!out.pass) return out;
    // Exact forms: images of the (k-1)-blades; reps must stay independent
    // modulo that span.
    int n = p.dimension();
    auto src = blades_of_degree(n, k - 1), cols = blades_of_degree(n, k);
    std::map<Blade, size_t> col_of;
    for (size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
    RatFunc zero(p.ctx()->vars, 0);
    Matrix<RatFunc> image;
    if (k >= 1)
        for (Blade b : src) {
            Form e(p.ctx(), n);
            e.add_term(b, CScalar(p.ctx(), 1));
            Form de = differential(p, e);
            if (de.is_zero()) continue;
            std::vector<RatFunc> row(cols.size(), zero);
            for (const auto& [bb, v] : de.terms()) row[col_of[bb]] = v.as_ratfunc();
            image.push_back(std::move(row));
        }
    int rank_image = image.empty() ? 0 : field_rank(image);
    Matrix<RatFunc> both = image;
    for (const Form& r : reps) {
        std::vector<RatFunc> row(cols.size(), zero);
        for (const auto& [bb, v] : r.terms()) row[col_of.at(bb)] = v.as_ratfunc();
        both.push_back(std::move(row));
    }
    int rank_both = both.empty() ? 0 : field_rank(both);
    out.independent_mod_exact = rank_both == rank_image + int(reps.size());
    out.pass = out.independent_mod_exact;
    return out;
}

}  // namespace nilform
