#include "pellfrac/contfrac.hpp"

#include <cassert>
#include <sstream>

#include "pellfrac/errors.hpp"

namespace pellfrac {

SurdExpansion expand_sqrt(const Int& f) {
    if (f < 2) throw DomainError("expand_sqrt: f must be >= 2, got " + to_string(f));
    if (is_perfect_square(f))
        throw PerfectSquareError("expand_sqrt: " + to_string(f) + " is a perfect square");

    SurdExpansion e;
    e.f = f;
    e.a0 = isqrt(f);
    e.r_seq.push_back(0);
    e.s_seq.push_back(1);

    Int r = 0, s = 1, a = e.a0;
    while (true) {
        Int r_next = a * s - r;
        Int num = f - r_next * r_next;
        assert(num % s == 0);
        Int s_next = num / s;
        Int a_next = (e.a0 + r_next) / s_next;  // floor: operands positive
        e.r_seq.push_back(r_next);
        e.s_seq.push_back(s_next);
        e.period.push_back(a_next);
        r = r_next;
        s = s_next;
        a = a_next;
        if (s == 1) break;  // first return of s = 1 closes the period
    }
    e.period_length = e.period.size();
    e.half_index = e.period_length / 2;

    assert(e.period.back() == 2 * e.a0);
    return e;
}

ConvergentTable::ConvergentTable(const Int& a0, const std::vector<Int>& quotients) {
    // columns -2 and -1 first: A_{-1} = B_{-2} = 1, A_{-2} = B_{-1} = 0
    A_ = {0, 1};
    B_ = {1, 0};
    A_.reserve(quotients.size() + 3);
    B_.reserve(quotients.size() + 3);
    Int q0 = a0;
    A_.push_back(q0 * A_[1] + A_[0]);
    B_.push_back(q0 * B_[1] + B_[0]);
    for (const Int& q : quotients) {
        A_.push_back(q * A_[A_.size() - 1] + A_[A_.size() - 2]);
        B_.push_back(q * B_[B_.size() - 1] + B_[B_.size() - 2]);
    }
}

std::vector<ConvergentPair> convergents(const Int& a0,
                                        const std::vector<Int>& quotients,
                                        std::size_t k) {
    if (k > quotients.size())
        throw DomainError("convergents: k exceeds available quotients");
    ConvergentTable tab(a0, quotients);
    std::vector<ConvergentPair> out;
    out.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        out.push_back({static_cast<long>(i), tab.A(static_cast<long>(i)),
                       tab.B(static_cast<long>(i))});
    return out;
}

Rat reversed_value(const std::vector<Int>& quotients) {
    if (quotients.empty()) throw DomainError("reversed_value: empty quotient list");
    for (const Int& q : quotients)
        if (q <= 0) throw DomainError("reversed_value: quotients must be positive");
    // evaluate [b_m; b_{m-1}, ..., b_0] bottom-up
    Rat v(quotients.front());
    for (std::size_t i = 1; i < quotients.size(); ++i)
        v = Rat(quotients[i]) + 1 / v;
    v.canonicalize();
    return v;
}

namespace {

std::string eq_detail(const std::string& lhs, const Int& l, const Int& r) {
    std::ostringstream os;
    os << lhs << ": " << l.get_str() << (l == r ? " == " : " != ") << r.get_str();
    return os.str();
}

} // namespace

IdentityReport identity_report(const Int& f) {
    SurdExpansion e = expand_sqrt(f);
    const std::size_t n1 = e.period_length;      // n + 1
    const long n = static_cast<long>(n1) - 1;
    const long m = static_cast<long>(e.half_index);
    const bool even_period = n1 % 2 == 0;
    ConvergentTable tab(e.a0, e.period);         // indices up to n + 1

    IdentityReport rep;
    rep.f = f;
    auto add = [&](std::string id, bool applicable, bool pass, std::string detail) {
        rep.lines.push_back({std::move(id), applicable, pass, std::move(detail)});
    };

    // cross products and square norms against the r/s side sequences,
    // for every index in the period
    {
        bool ok_r = true, ok_s = true;
        for (long k = -1; k <= n; ++k) {
            const bool k_odd = ((k % 2) + 2) % 2 == 1;
            Int cross = tab.A(k) * tab.A(k - 1) - f * tab.B(k) * tab.B(k - 1);
            Int want_r = e.r_seq[static_cast<std::size_t>(k + 1)];
            if (k_odd) want_r = -want_r;  // sign (-1)^k
            if (cross != want_r) ok_r = false;
            Int sq = tab.A(k) * tab.A(k) - f * tab.B(k) * tab.B(k);
            Int want_s = e.s_seq[static_cast<std::size_t>(k + 1)];
            if (!k_odd) want_s = -want_s;  // sign (-1)^{k+1}
            if (sq != want_s) ok_s = false;
        }
        add("cross_product_r", true, ok_r,
            "A_k*A_{k-1} - f*B_k*B_{k-1} == (-1)^k r_{k+1} for k = -1.." + std::to_string(n));
        add("square_norm_s", true, ok_s,
            "A_k^2 - f*B_k^2 == (-1)^{k+1} s_{k+1} for k = -1.." + std::to_string(n));
    }

    // r_k never exceeds a0
    {
        bool ok = true;
        for (const Int& r : e.r_seq)
            if (r > e.a0) ok = false;
        add("r_bounded_by_a0", true, ok, "max r_k <= a0 = " + e.a0.get_str());
    }

    // closed forms for the fundamental solution (c, h) from the half period
    Int c, h;
    if (even_period) {
        c = tab.A(n);
        h = tab.B(n);
    } else {
        c = 2 * tab.A(n) * tab.A(n) + 1;
        h = 2 * tab.A(n) * tab.B(n);
    }
    if (even_period) {
        Int c2 = tab.A(m) * tab.B(m - 1) + tab.A(m - 1) * tab.B(m - 2);
        Int h2 = tab.B(m - 1) * (tab.B(m) + tab.B(m - 2));
        add("even_period_c_h", true, c2 == c && h2 == h,
            eq_detail("c", c2, c) + "; " + eq_detail("h", h2, h));
        add("odd_period_c_h", false, true, "period is even");
        add("odd_period_solution", false, true, "period is even");
    } else {
        Int w = tab.A(m) * tab.B(m) + tab.A(m - 1) * tab.B(m - 1);
        Int c2 = 2 * w * w + 1;
        Int c3 = (tab.A(m) * tab.A(m) + tab.A(m - 1) * tab.A(m - 1)) *
                     (tab.B(m) * tab.B(m) + tab.B(m - 1) * tab.B(m - 1)) +
                 w * w;
        Int h2 = 2 * w * (tab.B(m) * tab.B(m) + tab.B(m - 1) * tab.B(m - 1));
        add("even_period_c_h", false, true, "period is odd");
        add("odd_period_c_h", true, c2 == c && c3 == c && h2 == h,
            eq_detail("c", c2, c) + "; " + eq_detail("h", h2, h));
        // negative-Pell convergent doubles to the +1 solution
        Int cn = 2 * tab.A(n) * tab.A(n) + 1;
        Int hn = 2 * tab.A(n) * tab.B(n);
        add("odd_period_solution", true, cn == c && hn == h,
            eq_detail("c", cn, c) + "; " + eq_detail("h", hn, h));
    }

    // middle-quotient properties. s_m = 2 is provable when a_m = a0, and when
    // a_m = a0 - 1 with a0 >= 4; for a0 <= 3 it can genuinely fail (f = 8, 12),
    // so those bases are out of hypothesis rather than failures.
    {
        bool has_middle = even_period && m >= 1;
        Int am = has_middle ? e.a(static_cast<std::size_t>(m)) : Int(0);
        bool member = has_middle && (am == e.a0 || am == e.a0 - 1);
        bool provable = has_middle && (am == e.a0 || (am == e.a0 - 1 && e.a0 >= 4));
        Int sm = has_middle ? e.s_seq[static_cast<std::size_t>(m)] : Int(0);
        add("middle_s_two", provable, !provable || sm == 2,
            provable ? eq_detail("s_m", sm, Int(2))
                     : "needs even period, a_m in {a0, a0-1}, and a0 >= 4 unless a_m = a0");

        bool trbl = member && sm == 2;
        if (trbl) {
            Int lhs = tab.B(m) + tab.B(m - 2);
            add("middle_convergent_sum", true, tab.A(m - 1) == lhs,
                eq_detail("A_{m-1}", tab.A(m - 1), lhs));
            Int prod = tab.A(m - 1) * lhs;
            if (m % 2 == 1)
                add("middle_product", true, c - 1 == prod, eq_detail("c-1", c - 1, prod));
            else
                add("middle_product", true, c + 1 == prod, eq_detail("c+1", c + 1, prod));
        } else {
            add("middle_convergent_sum", false, true, "needs a_m in {a0, a0-1} and s_m = 2");
            add("middle_product", false, true, "needs a_m in {a0, a0-1} and s_m = 2");
        }
    }

    // period == 2 mod 4: h A_{m-1} - (c - 1) B_{m-1} = 0
    if (n1 % 4 == 2) {
        Int lhs = h * tab.A(m - 1) - (c - 1) * tab.B(m - 1);
        add("half_period_relation", true, lhs == 0, eq_detail("h*A_{m-1} - (c-1)*B_{m-1}", lhs, Int(0)));
    } else {
        add("half_period_relation", false, true, "period != 2 mod 4");
    }

    // unconditional endpoint identities
    {
        Int lhs = e.a0 * tab.B(n) + tab.B(n - 1);
        add("a0_shift", true, tab.A(n) == lhs, eq_detail("A_n", tab.A(n), lhs));
        Int l2 = tab.B(n) * (f - e.a0 * e.a0);
        Int r2 = tab.A(n - 1) + e.a0 * tab.B(n - 1);
        add("penultimate_relation", true, l2 == r2, eq_detail("B_n*(f - a0^2)", l2, r2));
    }

    rep.all_pass = true;
    for (const auto& line : rep.lines)
        if (line.applicable && !line.pass) rep.all_pass = false;
    return rep;
}

} // namespace pellfrac
