#include "pellfrac/polynomial.hpp"

#include <sstream>

#include "pellfrac/errors.hpp"

namespace pellfrac {

IntPolynomial::IntPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rat(0));
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

IntPolynomial IntPolynomial::constant(const Int& v) {
    return IntPolynomial({Rat(v)});
}

IntPolynomial IntPolynomial::from_ints(const std::vector<Int>& coeffs) {
    std::vector<Rat> rs;
    rs.reserve(coeffs.size());
    for (const auto& c : coeffs) rs.emplace_back(c);
    return IntPolynomial(std::move(rs));
}

void IntPolynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& IntPolynomial::coeff(std::size_t i) const {
    static const Rat zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

bool IntPolynomial::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

void IntPolynomial::assert_integral(const std::string& what) const {
    if (!is_integral())
        throw NonIntegralError(what + ": coefficient " + to_string() +
                               " is not integral");
}

Int IntPolynomial::eval(const Int& t) const {
    Rat v = eval_rat(Rat(t));
    if (v.get_den() != 1)
        throw NonIntegralError("polynomial value is not an integer");
    return v.get_num();
}

Rat IntPolynomial::eval_rat(const Rat& t) const {
    Rat v(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
    return v;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Rat> r(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Rat> r(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    std::vector<Rat> r(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(r));
}

bool IntPolynomial::is_constant_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0 && coeffs_.size() > 1) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (i == 0 || a != 1) {
            os << a.get_num().get_str();
            if (a.get_den() != 1) os << "/" << a.get_den().get_str();
            if (i > 0) os << "*";
        }
        if (i == 1) os << var;
        else if (i > 1) os << var << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace pellfrac
