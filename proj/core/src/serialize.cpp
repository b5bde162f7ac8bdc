#include "nuwigner/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "nuwigner/errors.hpp"

namespace nuwigner {

namespace {

Json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer literal: " + j.get<std::string>());
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

long long_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

void escape_into(std::string& out, const std::string& s) {
    out += Json(s).dump();
}

void emit(std::string& out, const Json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
    const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                escape_into(out, it.key());
                out += ": ";
                emit(out, it.value(), depth + 1);
            }
            out += "\n" + close + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Short arrays of scalars stay on one line.
            bool flat = j.size() <= 8;
            for (const auto& e : j) flat = flat && !e.is_structured();
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    emit(out, j[i], depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                emit(out, j[i], depth + 1);
            }
            out += "\n" + close + "]";
            return;
        }
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            out += std::isfinite(x) ? format_double(x) : "null";
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

Json to_json(const Rational& q) { return Json::array({integer_json(q.num()), integer_json(q.den())}); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

Json to_json(const NuPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(p.is_real() ? to_json(c.re()) : to_json(c));
    return out;
}

Json to_json(const RadicalSum& r) {
    Json out = Json::array();
    for (const auto& t : r.terms()) {
        const Json radicand = to_json(t.radicand);
        for (std::size_t k = 0; k < t.coeff.coeffs().size(); ++k) {
            const GaussianRational& c = t.coeff.coeffs()[k];
            if (c.is_zero()) continue;
            out.push_back(Json{{"coeff", to_json(c)}, {"nu_power", k}, {"radicand", radicand}});
        }
    }
    return out;
}

Json to_json(const BasisLabel& label) {
    return std::visit(
        [](const auto& l) -> Json {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, FockLabel>) {
                return Json{{"kind", "fock"}, {"n", l.n}};
            } else if constexpr (std::is_same_v<T, TwoModeLabel>) {
                return Json{{"kind", "two_mode"}, {"n1", l.n1}, {"n2", l.n2}};
            } else {
                return Json{{"kind", "spin"}, {"two_j", l.two_j}, {"two_m", l.two_m}};
            }
        },
        label.value());
}

Json to_json(const OperatorMatrix& m) {
    Json basis = Json::array();
    for (const auto& l : m.basis()) basis.push_back(to_json(l));
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c)
            if (!m(r, c).is_zero()) entries.push_back(Json{{"row", r}, {"col", c}, {"terms", to_json(m(r, c))}});
    return Json{{"dim", m.dim()}, {"basis", std::move(basis)}, {"entries", std::move(entries)}};
}

Json to_json(const ComplexMatrix& m) {
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t r = 0; r < m.dim; ++r) {
        Json row_re = Json::array();
        Json row_im = Json::array();
        for (std::size_t c = 0; c < m.dim; ++c) {
            row_re.push_back(m(r, c).real());
            row_im.push_back(m(r, c).imag());
        }
        re.push_back(std::move(row_re));
        im.push_back(std::move(row_im));
    }
    return Json{{"dim", m.dim}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Json to_json(const AlgebraReport& r) {
    Json out{{"relation", r.relation_id},
             {"mode", to_string(r.mode)},
             {"verdict", to_string(r.verdict)},
             {"max_residual", r.max_residual}};
    if (r.caveat) out["caveat"] = *r.caveat;
    if (r.note) out["note"] = *r.note;
    if (r.witness)
        out["witness"] = Json{{"row", r.witness->row},
                              {"col", r.witness->col},
                              {"expected", r.witness->expected},
                              {"actual", r.witness->actual}};
    return out;
}

Json to_json(const ErratumFinding& f) {
    Json printed = Json::array();
    for (const auto& r : f.printed_checks) printed.push_back(to_json(r));
    Json computed = Json::array();
    for (const auto& r : f.computed_checks) computed.push_back(to_json(r));
    return Json{{"id", f.id},
                {"summary", f.summary},
                {"printed", f.printed},
                {"computed", f.computed},
                {"confirmed", f.confirmed()},
                {"printed_checks", std::move(printed)},
                {"computed_checks", std::move(computed)}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("rational must be [num, den], got " + j.dump());
    const mpz_class den = integer_from_json(j[1]);
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(integer_from_json(j[0]), den);
}

GaussianRational gaussian_from_json(const Json& j) {
    if (j.is_array()) return GaussianRational(rational_from_json(j));
    return GaussianRational(rational_from_json(field(j, "re")), rational_from_json(field(j, "im")));
}

NuPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a coefficient list, got " + j.dump());
    std::vector<GaussianRational> coeffs;
    for (const auto& c : j) coeffs.push_back(gaussian_from_json(c));
    return NuPolynomial(std::move(coeffs));
}

RadicalSum radical_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("radical sum must be a term list, got " + j.dump());
    std::vector<RadicalTerm> terms;
    for (const auto& t : j) {
        const long power = long_field(t, "nu_power");
        if (power < 0) throw ParseError("negative nu_power");
        const NuPolynomial radicand = polynomial_from_json(field(t, "radicand"));
        if (radicand.is_zero()) throw ParseError("zero radicand");
        terms.push_back(RadicalTerm{NuPolynomial::monomial(gaussian_from_json(field(t, "coeff")), static_cast<int>(power)),
                                    radicand});
    }
    return RadicalSum::from_terms(terms);
}

BasisLabel label_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("label kind must be a string");
    const auto k = kind.get<std::string>();
    try {
        if (k == "fock") return BasisLabel::fock(long_field(j, "n"));
        if (k == "two_mode") return BasisLabel::two_mode(long_field(j, "n1"), long_field(j, "n2"));
        if (k == "spin") return BasisLabel::spin(long_field(j, "two_j"), long_field(j, "two_m"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid label: ") + e.what());
    }
    throw ParseError("unknown label kind '" + k + "'");
}

OperatorMatrix matrix_from_json(const Json& j) {
    const long dim = long_field(j, "dim");
    const Json& labels = field(j, "basis");
    if (!labels.is_array() || static_cast<long>(labels.size()) != dim)
        throw ParseError("basis length does not match dim " + std::to_string(dim));
    Basis basis;
    for (const auto& l : labels) basis.push_back(label_from_json(l));
    OperatorMatrix m = [&] {
        try {
            return OperatorMatrix(std::move(basis));
        } catch (const Error& e) {
            throw ParseError(std::string("invalid basis: ") + e.what());
        }
    }();
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("entries must be a list");
    for (const auto& e : entries) {
        const long r = long_field(e, "row");
        const long c = long_field(e, "col");
        if (r < 0 || c < 0 || r >= dim || c >= dim)
            throw ParseError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range");
        m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) += radical_from_json(field(e, "terms"));
    }
    return m;
}

std::string dump_json(const Json& j) {
    std::string out;
    emit(out, j, 0);
    out += "\n";
    return out;
}

}  // namespace nuwigner
