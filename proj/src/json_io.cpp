#include "sheetlab/json_io.hpp"

#include "sheetlab/errors.hpp"

namespace sheetlab::io {

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw ParseError(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

std::size_t as_size(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

}  // namespace

json encode(const Rational& r) { return r.to_string(); }

json encode(const UniPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(encode(c));
    }
    return arr;
}

json encode(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) {
            row.push_back(encode(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"ambient", to_string(m.ambient())}, {"entries", std::move(rows)}};
}

json encode(const InvariantFactorProfile& profile) {
    json big = json::array();
    json small = json::array();
    for (const auto& p : profile.Q_list()) {
        big.push_back(encode(p));
    }
    for (const auto& p : profile.q_list()) {
        small.push_back(encode(p));
    }
    return {{"Q", std::move(big)}, {"q", std::move(small)}};
}

json encode(const Partition& p) { return p.parts(); }

json encode(const SheetDescriptor& d) {
    return {{"sigma", encode(d.sigma)},
            {"conjugate", encode(d.conjugate)},
            {"orbit_dim", d.orbit_dim},
            {"quotient_dim", d.quotient_dim}};
}

json encode(const QuotientPoint& z) {
    json polys = json::array();
    for (const auto& p : z.polys()) {
        polys.push_back(encode(p));
    }
    return {{"sigma", encode(z.sigma())}, {"p", std::move(polys)}};
}

json encode(const MultiPoly& poly, std::size_t n) {
    json terms = json::array();
    for (const auto& [e, c] : poly.terms()) {
        json mono = json::object();
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] != 0) {
                mono[variable_name(n, v)] = e[v];
            }
        }
        terms.push_back({{"monomial", std::move(mono)}, {"coefficient", encode(c)}});
    }
    return terms;
}

json encode(const IdealGenerators& gens) {
    const std::size_t n = gens.z.size();
    json list = json::array();
    json text = json::array();
    for (const auto& g : gens.gens) {
        list.push_back(encode(g, n));
        text.push_back(display(g, n));
    }
    return {{"sigma", encode(gens.sigma)}, {"z", encode(gens.z)}, {"generators", std::move(list)},
            {"text", std::move(text)}};
}

json encode(const MatrixSubspace& s) {
    json arr = json::array();
    for (const auto& m : s.basis()) {
        arr.push_back(encode(m));
    }
    return arr;
}

json encode(const DimensionReport& r) {
    return {{"centralizer_dim", r.centralizer_dim},
            {"derived_dim", r.derived_dim},
            {"codim", r.codim},
            {"abelian", r.abelian}};
}

Rational decode_rational(const json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        throw ParseError("rational must be a string \"p/q\" or an integer, got " + j.dump());
    }
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

UniPoly decode_poly(const json& j) {
    if (!j.is_array()) {
        throw ParseError("polynomial must be a coefficient array");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        coeffs.push_back(decode_rational(c));
    }
    return UniPoly(std::move(coeffs));
}

RationalMatrix decode_matrix(const json& j, Ambient default_ambient) {
    const json& entries = field(j, "entries");
    if (!entries.is_array()) {
        throw ParseError("\"entries\" must be an array of rows");
    }
    Ambient ambient = default_ambient;
    if (j.contains("ambient")) {
        if (!j.at("ambient").is_string()) {
            throw ParseError("\"ambient\" must be \"sl\" or \"gl\"");
        }
        try {
            ambient = parse_ambient(j.at("ambient").get<std::string>());
        } catch (const InputError& e) {
            throw ParseError(e.what());
        }
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : entries) {
        if (!row.is_array()) {
            throw ParseError("each matrix row must be an array");
        }
        std::vector<Rational> r;
        for (const auto& v : row) {
            r.push_back(decode_rational(v));
        }
        rows.push_back(std::move(r));
    }
    if (j.contains("n")) {
        const std::size_t n = as_size(j.at("n"), "\"n\"");
        if (n != rows.size()) {
            throw ShapeError("\"n\" is " + std::to_string(n) + " but there are " + std::to_string(rows.size()) +
                             " rows");
        }
    }
    return RationalMatrix(std::move(rows), ambient);
}

Partition decode_partition(const json& j) {
    if (!j.is_array()) {
        throw ParseError("partition must be an integer array");
    }
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw ParseError("partition parts must be integers");
        }
        const int b = v.get<int>();
        if (b != 0) {
            parts.push_back(b);
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

QuotientPoint decode_quotient_point(const json& j) {
    const Partition sigma = decode_partition(field(j, "sigma"));
    if (j.contains("chart")) {
        std::vector<Rational> chart;
        for (const auto& c : j.at("chart")) {
            chart.push_back(decode_rational(c));
        }
        return QuotientPoint::from_chart(sigma, chart);
    }
    const json& p = field(j, "p");
    if (!p.is_array()) {
        throw ParseError("\"p\" must be an array of polynomials");
    }
    std::vector<UniPoly> polys;
    for (const auto& entry : p) {
        polys.push_back(decode_poly(entry));
    }
    return QuotientPoint(sigma, std::move(polys));
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string display(const MultiPoly& poly, std::size_t n) {
    return poly.to_string([n](std::size_t v) { return variable_name(n, v); });
}

}  // namespace sheetlab::io
