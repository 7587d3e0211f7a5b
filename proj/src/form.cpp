#include "nilform/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilform {

Form::Form(CtxPtr ctx, int n) : ctx_(std::move(ctx)), n_(n) {
    if (n < 0 || n > kMaxGenerators)
        throw std::invalid_argument("Form: dimension must be between 0 and 16");
}

Form Form::unit(const CtxPtr& ctx, int n) {
    Form f(ctx, n);
    f.terms_.emplace(Blade(0), CScalar(ctx, 1));
    return f;
}

Form Form::generator(const CtxPtr& ctx, int n, int index) {
    if (index < 1 || index > n) throw std::invalid_argument("Form::generator: index out of range");
    Form f(ctx, n);
    f.terms_.emplace(Blade(1u << (index - 1)), CScalar(ctx, 1));
    return f;
}

Form Form::blade(const CtxPtr& ctx, int n, std::initializer_list<int> indices) {
    Form f = unit(ctx, n);
    for (int i : indices) f = wedge(f, generator(ctx, n, i));
    return f;
}

CScalar Form::coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? CScalar(ctx_, 0) : it->second;
}

void Form::add_term(Blade b, const CScalar& c) {
    if (c.is_zero()) return;
    if (blade_degree(b) > n_) throw std::invalid_argument("Form::add_term: blade exceeds dimension");
    auto [it, fresh] = terms_.emplace(b, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Form::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int d = blade_degree(terms_.begin()->first);
    for (const auto& [b, c] : terms_)
        if (blade_degree(b) != d) throw std::domain_error("Form: not homogeneous");
    return d;
}

int Form::max_degree() const {
    int d = 0;
    for (const auto& [b, c] : terms_) d = std::max(d, blade_degree(b));
    return d;
}

Form Form::operator-() const {
    Form r(ctx_, n_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
}

static void require_same_space(const Form& a, const Form& b, const char* op) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument(std::string("Form ") + op + ": dimension mismatch");
}

Form& Form::operator+=(const Form& o) {
    require_same_space(*this, o, "+");
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    require_same_space(*this, o, "-");
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

Form operator*(const CScalar& c, const Form& a) {
    Form r(a.ctx_, a.n_);
    for (const auto& [b, v] : a.terms_) r.add_term(b, c * v);
    return r;
}

Form wedge(const Form& a, const Form& b) {
    require_same_space(a, b, "wedge");
    Form r(a.ctx(), a.dimension());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            if (ba & bb) continue;
            CScalar c = ca * cb;
            if (merge_sign(ba, bb) < 0) c = -c;
            r.add_term(Blade(ba | bb), c);
        }
    return r;
}

Form wedge_pow(const Form& a, int k) {
    Form r = Form::unit(a.ctx(), a.dimension());
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

Form grade_project(const Form& a, int k) {
    Form r(a.ctx(), a.dimension());
    for (const auto& [b, c] : a.terms())
        if (blade_degree(b) == k) r.add_term(b, c);
    return r;
}

CScalar top_coefficient(const Form& a) {
    Blade top = Blade((1u << a.dimension()) - 1);
    return a.coefficient(top);
}

Form conj_form(const Form& a) {
    Form r(a.ctx(), a.dimension());
    for (const auto& [b, c] : a.terms()) r.add_term(b, conjugate(c));
    return r;
}

Form exp_even(const Form& B) {
    for (const auto& [b, c] : B.terms()) {
        int d = blade_degree(b);
        if (d % 2 != 0 || d == 0)
            throw std::invalid_argument("exp_even: argument must have only terms of even degree >= 2");
    }
    Form result = Form::unit(B.ctx(), B.dimension());
    Form power = result;
    Rational factorial = 1;
    for (int m = 1; 2 * m <= B.dimension(); ++m) {
        power = wedge(power, B);
        if (power.is_zero()) break;
        factorial *= m;
        result += CScalar(B.ctx(), Rational(1) / factorial) * power;
    }
    return result;
}

namespace {

Form contract_vector(int j, const Form& a) {  // iota_{e_j}, 1-based j
    Form r(a.ctx(), a.dimension());
    Blade bit = Blade(1u << (j - 1));
    for (const auto& [b, c] : a.terms()) {
        if (!(b & bit)) continue;
        int below = __builtin_popcount(b & Blade(bit - 1));
        r.add_term(Blade(b & ~bit), (below & 1) ? -c : c);
    }
    return r;
}

}  // namespace

Form contract(const Polyvector& p, const Form& a) {
    require_same_space(p, a, "contract");
    Form r(a.ctx(), a.dimension());
    for (const auto& [pb, pc] : p.terms()) {
        Form t = a;
        // iota_{X^Y} = iota_Y o iota_X: factors act in ascending index order
        for (Blade rest = pb; rest && !t.is_zero(); rest &= Blade(rest - 1))
            t = contract_vector(__builtin_ctz(rest) + 1, t);
        r += pc * t;
    }
    return r;
}

Form apply_linear(const Form& a, const std::vector<Form>& images) {
    if (int(images.size()) != a.dimension())
        throw std::invalid_argument("apply_linear: need one image per generator");
    const Form* model = images.empty() ? &a : &images[0];
    Form r(model->ctx(), model->dimension());
    for (const auto& [b, c] : a.terms()) {
        Form t = Form::unit(model->ctx(), model->dimension());
        for (Blade rest = b; rest; rest &= Blade(rest - 1))
            t = wedge(t, images[size_t(__builtin_ctz(rest))]);
        r += c * t;
    }
    return r;
}

Form evaluate_form(const Form& a, const Assignment& at, const CtxPtr& target_ctx) {
    Form r(target_ctx, a.dimension());
    for (const auto& [b, c] : a.terms()) r.add_term(b, convert_scalar(c, at, target_ctx));
    return r;
}

namespace {

std::vector<int> blade_indices(Blade b) {
    std::vector<int> idx;
    for (Blade rest = b; rest; rest &= Blade(rest - 1)) idx.push_back(__builtin_ctz(rest) + 1);
    return idx;
}

}  // namespace

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::vector<Blade> blades;
    for (const auto& [b, c] : terms_) blades.push_back(b);
    std::sort(blades.begin(), blades.end(), [](Blade x, Blade y) {
        int dx = blade_degree(x), dy = blade_degree(y);
        if (dx != dy) return dx < dy;
        return blade_indices(x) < blade_indices(y);
    });
    std::ostringstream os;
    bool first = true;
    for (Blade b : blades) {
        const CScalar& c = terms_.at(b);
        std::string cs = c.str();
        bool negated = false;
        bool simple = c.is_rational_function() && c.as_ratfunc().is_constant();
        if (simple) {
            Rational q = c.to_rational();
            if (q < 0) {
                negated = true;
                cs = to_string(-q);
            }
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        if (b == 0) {
            os << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (cs != "1") os << (simple ? cs : "(" + cs + ")") << "*";
        os << "e";
        auto idx = blade_indices(b);
        if (n_ <= 9) {
            for (int i : idx) os << i;
        } else {
            os << "[";
            for (size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
            os << "]";
        }
    }
    return os.str();
}

}  // namespace nilform
