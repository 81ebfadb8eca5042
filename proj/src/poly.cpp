#include "frs/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frs {

namespace {

void strip_trailing_zeros(std::vector<Fe>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

void require_same_field(const Poly& p, const Poly& r) {
    if (!p.field().same_modulus(r.field()))
        throw std::invalid_argument("Poly: operands live in different fields");
}

} // namespace

Poly::Poly(PrimeField field, std::vector<Fe> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (Fe& c : coeffs_) c %= field_.q();
    strip_trailing_zeros(coeffs_);
}

Poly Poly::monomial(const PrimeField& field, std::size_t power, Fe coeff) {
    std::vector<Fe> c(power + 1, 0);
    c[power] = coeff;
    return Poly(field, std::move(c));
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Fe Poly::eval(Fe x) const {
    Fe acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

Poly operator+(const Poly& p, const Poly& r) {
    require_same_field(p, r);
    const auto& f = p.field();
    std::vector<Fe> out(std::max(p.coeffs().size(), r.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(p.coeff(i), r.coeff(i));
    return Poly(f, std::move(out));
}

Poly operator-(const Poly& p, const Poly& r) {
    require_same_field(p, r);
    const auto& f = p.field();
    std::vector<Fe> out(std::max(p.coeffs().size(), r.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(p.coeff(i), r.coeff(i));
    return Poly(f, std::move(out));
}

Poly operator*(const Poly& p, const Poly& r) {
    require_same_field(p, r);
    const auto& f = p.field();
    if (p.is_zero() || r.is_zero()) return Poly::zero(f);
    // Schoolbook; degrees stay tiny in this library.
    std::vector<Fe> out(p.coeffs().size() + r.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < r.coeffs().size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(p.coeffs()[i], r.coeffs()[j]));
        }
    }
    return Poly(f, std::move(out));
}

Poly scale(const Poly& p, Fe c) {
    const auto& f = p.field();
    std::vector<Fe> out(p.coeffs());
    for (Fe& v : out) v = f.mul(v, c % f.q());
    return Poly(f, std::move(out));
}

Poly dilate(const Poly& p, Fe c) {
    const auto& f = p.field();
    std::vector<Fe> out(p.coeffs());
    Fe power = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = f.mul(out[i], power);
        power = f.mul(power, c % f.q());
    }
    return Poly(f, std::move(out));
}

bool poly_less(const Poly& a, const Poly& b) {
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) out << ' ';
        out << p.coeffs()[i];
    }
    return out.str();
}

Poly parse_poly(const PrimeField& field, const std::string& text) {
    std::istringstream in(text);
    std::vector<Fe> coeffs;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_poly: bad coefficient '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("parse_poly: bad coefficient '" + token + "'");
        coeffs.push_back(field.reduce(v));
    }
    if (coeffs.empty()) throw std::invalid_argument("parse_poly: empty input");
    return Poly(field, std::move(coeffs));
}

} // namespace frs
