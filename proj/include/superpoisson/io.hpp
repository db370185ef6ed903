#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "yang_baxter.hpp"

namespace superpoisson::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed document: bad syntax, schema violation or inhomogeneous data.
class InputError : public Error {
  public:
    using Error::Error;
};

enum class DocumentKind { algebra, representation, linear_map, tensor, form };

inline std::string to_string(DocumentKind k) {
    switch (k) {
    case DocumentKind::algebra: return "algebra";
    case DocumentKind::representation: return "representation";
    case DocumentKind::linear_map: return "linear_map";
    case DocumentKind::tensor: return "tensor";
    case DocumentKind::form: return "form";
    }
    return "?";
}

inline std::optional<DocumentKind> kind_from_string(std::string_view s) {
    for (auto k : {DocumentKind::algebra, DocumentKind::representation, DocumentKind::linear_map,
                   DocumentKind::tensor, DocumentKind::form})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

struct Document {
    DocumentKind kind;
    int version = kSchemaVersion;
    json payload;
    friend bool operator==(const Document&, const Document&) = default;
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& field, const std::string& what) {
    throw InputError("schema error at " + field + ": " + what);
}

inline const json& member(const json& obj, const std::string& key, const std::string& field) {
    if (!obj.is_object())
        schema_error(field, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(field + "." + key, "missing");
    return *it;
}

inline const json& array_member(const json& obj, const std::string& key, const std::string& field) {
    const json& a = member(obj, key, field);
    if (!a.is_array())
        schema_error(field + "." + key, "expected an array");
    return a;
}

inline std::string string_value(const json& j, const std::string& field) {
    if (!j.is_string())
        schema_error(field, "expected a string");
    return j.get<std::string>();
}

inline Scalar scalar_value(const json& j, const std::string& field) {
    if (j.is_number_integer())
        return Scalar(j.get<long long>());
    if (j.is_number_float())
        schema_error(field, "floating-point numbers are not accepted; write \"p/q\"");
    if (!j.is_string())
        schema_error(field, "expected a rational string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
        schema_error(field, e.what());
    }
}

inline Parity parity_value(const json& j, const std::string& field) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "even")
            return Parity::even;
        if (s == "odd")
            return Parity::odd;
    } else if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (v == 0 || v == 1)
            return parity_from_int(v);
    }
    schema_error(field, "expected \"even\" or \"odd\"");
}

inline json encode_basis(const GradedSpace& s) {
    json out = json::array();
    for (const auto& b : s.basis())
        out.push_back({{"name", b.name}, {"parity", to_string(b.parity)}});
    return out;
}

inline GradedSpace decode_basis(const json& j, const std::string& field) {
    if (!j.is_array())
        schema_error(field, "expected an array");
    std::vector<BasisElement> elems;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        elems.push_back({string_value(member(j[i], "name", f), f + ".name"),
                         parity_value(member(j[i], "parity", f), f + ".parity")});
    }
    try {
        return GradedSpace(std::move(elems));
    } catch (const Error& e) {
        schema_error(field, e.what());
    }
}

inline std::size_t basis_index(const GradedSpace& s, const json& j, const std::string& field) {
    const auto name = string_value(j, field);
    try {
        return s.index_of(name);
    } catch (const Error&) {
        schema_error(field, "unknown basis element '" + name + "'");
    }
}

inline json encode_rows(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(format_scalar(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix decode_rows(const json& j, std::size_t rows, std::size_t cols, const std::string& field) {
    if (!j.is_array() || j.size() != rows)
        schema_error(field, "expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols)
            schema_error(f, "expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = scalar_value(j[i][k], f + "[" + std::to_string(k) + "]");
    }
    return m;
}

/// Runs a constructor and reports any homogeneity failure against `field`.
template <class F>
auto with_field(const std::string& field, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError("invalid data at " + field + ": " + e.what());
    }
}

inline json encode_table(const SuperAlgebra& a, bool bracket) {
    json out = json::array();
    const auto& s = a.space();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            json terms = json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Scalar& c = bracket ? a.bracket(i, j, k) : a.product(i, j, k);
                if (c != 0)
                    terms.push_back({{"basis", s.name(k)}, {"coeff", format_scalar(c)}});
            }
            if (!terms.empty())
                out.push_back({{"left", s.name(i)}, {"right", s.name(j)}, {"out", std::move(terms)}});
        }
    return out;
}

inline void decode_table(SuperAlgebra& a, const json& payload, const std::string& key, const std::string& field) {
    if (!payload.contains(key))
        return;
    const json& rules = array_member(payload, key, field);
    std::vector<bool> seen(a.dim() * a.dim(), false);
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const std::string f = field + "." + key + "[" + std::to_string(r) + "]";
        const auto i = basis_index(a.space(), member(rules[r], "left", f), f + ".left");
        const auto j = basis_index(a.space(), member(rules[r], "right", f), f + ".right");
        if (seen[i * a.dim() + j])
            schema_error(f, "duplicate entry for (" + a.space().name(i) + ", " + a.space().name(j) + ")");
        seen[i * a.dim() + j] = true;
        Coefficients out(a.dim());
        const json& terms = array_member(rules[r], "out", f);
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string ft = f + ".out[" + std::to_string(t) + "]";
            out[basis_index(a.space(), member(terms[t], "basis", ft), ft + ".basis")] +=
                scalar_value(member(terms[t], "coeff", ft), ft + ".coeff");
        }
        with_field(f, [&] {
            if (key == "product")
                a.set_product(i, j, out);
            else
                a.set_bracket(i, j, out);
            return 0;
        });
    }
}

} // namespace detail

/// Canonical text: sorted keys, two-space indentation, trailing newline.
inline std::string serialize(const Document& d) {
    json j = {{"kind", to_string(d.kind)}, {"version", d.version}, {"payload", d.payload}};
    return j.dump(2) + "\n";
}

inline Document parse(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object())
        detail::schema_error("document", "expected an object");
    const auto kind_name = detail::string_value(detail::member(j, "kind", "document"), "document.kind");
    const auto kind = kind_from_string(kind_name);
    if (!kind)
        detail::schema_error("document.kind", "unknown kind '" + kind_name + "'");
    const json& v = detail::member(j, "version", "document");
    if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion)
        detail::schema_error("document.version", "expected " + std::to_string(kSchemaVersion));
    const json& payload = detail::member(j, "payload", "document");
    if (!payload.is_object())
        detail::schema_error("document.payload", "expected an object");
    return {*kind, kSchemaVersion, payload};
}

inline void expect_kind(const Document& d, DocumentKind k) {
    if (d.kind != k)
        throw InputError("expected a " + to_string(k) + " document, got " + to_string(d.kind));
}

inline json algebra_payload(const SuperAlgebra& a) {
    return {{"basis", detail::encode_basis(a.space())},
            {"product", detail::encode_table(a, false)},
            {"bracket", detail::encode_table(a, true)}};
}

inline SuperAlgebra algebra_from_payload(const json& p, const std::string& field = "payload") {
    SuperAlgebra a(detail::decode_basis(detail::member(p, "basis", field), field + ".basis"));
    detail::decode_table(a, p, "product", field);
    detail::decode_table(a, p, "bracket", field);
    return a;
}

inline Document encode(const SuperAlgebra& a) { return {DocumentKind::algebra, kSchemaVersion, algebra_payload(a)}; }

inline SuperAlgebra decode_algebra(const Document& d) {
    expect_kind(d, DocumentKind::algebra);
    return algebra_from_payload(d.payload);
}

/// Matrices keyed by algebra basis name; elements acting by zero are omitted.
inline Document encode(const Representation& r) {
    using F = Representation::Family;
    json p = {{"algebra", algebra_payload(r.algebra())}, {"module", detail::encode_basis(r.module())}};
    for (auto [f, key] : {std::pair{F::left, "left"}, std::pair{F::right, "right"}, std::pair{F::rho, "rho"}}) {
        json fam = json::object();
        for (std::size_t x = 0; x < r.algebra().dim(); ++x)
            if (!r.family(f)[x].is_zero())
                fam[r.algebra().space().name(x)] = detail::encode_rows(r.family(f)[x]);
        p[key] = std::move(fam);
    }
    return {DocumentKind::representation, kSchemaVersion, std::move(p)};
}

/// `algebra` supplies the acting algebra when the document does not embed
/// one; if both are present they must agree.
inline Representation decode_representation(const Document& d, const std::optional<SuperAlgebra>& algebra = {}) {
    expect_kind(d, DocumentKind::representation);
    const json& p = d.payload;
    std::optional<SuperAlgebra> embedded;
    if (p.contains("algebra"))
        embedded = algebra_from_payload(p["algebra"], "payload.algebra");
    if (embedded && algebra && !(*embedded == *algebra))
        detail::schema_error("payload.algebra", "differs from the algebra supplied separately");
    if (!embedded && !algebra)
        detail::schema_error("payload.algebra", "missing and no algebra was supplied");
    const SuperAlgebra& alg = embedded ? *embedded : *algebra;
    const GradedSpace module = detail::decode_basis(detail::member(p, "module", "payload"), "payload.module");
    std::array<std::vector<Matrix>, 3> fams;
    const std::array<const char*, 3> keys{"left", "right", "rho"};
    for (std::size_t f = 0; f < 3; ++f) {
        fams[f].assign(alg.dim(), Matrix(module.dim(), module.dim()));
        if (!p.contains(keys[f]))
            continue;
        const json& fam = p[keys[f]];
        const std::string ff = std::string("payload.") + keys[f];
        if (!fam.is_object())
            detail::schema_error(ff, "expected an object keyed by algebra basis names");
        for (const auto& [name, rows] : fam.items()) {
            const auto x = detail::basis_index(alg.space(), json(name), ff);
            fams[f][x] = detail::decode_rows(rows, module.dim(), module.dim(), ff + "." + name);
        }
    }
    return detail::with_field("payload", [&] {
        return Representation(alg, module, std::move(fams[0]), std::move(fams[1]), std::move(fams[2]));
    });
}

inline Document encode(const LinearMap& t) {
    return {DocumentKind::linear_map,
            kSchemaVersion,
            {{"parity", to_string(t.parity())},
             {"domain", detail::encode_basis(t.domain())},
             {"codomain", detail::encode_basis(t.codomain())},
             {"rows", detail::encode_rows(t.matrix())}}};
}

inline LinearMap decode_linear_map(const Document& d) {
    expect_kind(d, DocumentKind::linear_map);
    const json& p = d.payload;
    const Parity parity = detail::parity_value(detail::member(p, "parity", "payload"), "payload.parity");
    GradedSpace dom = detail::decode_basis(detail::member(p, "domain", "payload"), "payload.domain");
    GradedSpace cod = detail::decode_basis(detail::member(p, "codomain", "payload"), "payload.codomain");
    Matrix m = detail::decode_rows(detail::member(p, "rows", "payload"), cod.dim(), dom.dim(), "payload.rows");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && cod.parity(i) != dom.parity(j) + parity)
                throw InputError("payload.rows[" + std::to_string(i) + "][" + std::to_string(j) + "]: entry (" +
                                 cod.name(i) + ", " + dom.name(j) + ") breaks homogeneity of a " +
                                 to_string(parity) + " map");
    return {std::move(dom), std::move(cod), parity, std::move(m)};
}

inline Document encode(const TensorElement& r) {
    const auto& s = r.space();
    json terms = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (r(i, j) != 0)
                terms.push_back({{"left", s.name(i)}, {"right", s.name(j)}, {"coeff", format_scalar(r(i, j))}});
    return {DocumentKind::tensor,
            kSchemaVersion,
            {{"basis", detail::encode_basis(s)}, {"parity", to_string(r.parity())}, {"terms", std::move(terms)}}};
}

inline TensorElement decode_tensor(const Document& d) {
    expect_kind(d, DocumentKind::tensor);
    const json& p = d.payload;
    GradedSpace s = detail::decode_basis(detail::member(p, "basis", "payload"), "payload.basis");
    const Parity parity = detail::parity_value(detail::member(p, "parity", "payload"), "payload.parity");
    Matrix m(s.dim(), s.dim());
    const json& terms = detail::array_member(p, "terms", "payload");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string f = "payload.terms[" + std::to_string(t) + "]";
        const auto i = detail::basis_index(s, detail::member(terms[t], "left", f), f + ".left");
        const auto j = detail::basis_index(s, detail::member(terms[t], "right", f), f + ".right");
        const Scalar c = detail::scalar_value(detail::member(terms[t], "coeff", f), f + ".coeff");
        if (c != 0 && s.parity(i) + s.parity(j) != parity)
            throw InputError(f + ": term (" + s.name(i) + ", " + s.name(j) + ") at index pair (" +
                             std::to_string(i) + ", " + std::to_string(j) + ") is not " + to_string(parity));
        m(i, j) += c;
    }
    return {std::move(s), parity, std::move(m)};
}

inline Document encode(const BilinearForm& b) {
    return {DocumentKind::form,
            kSchemaVersion,
            {{"basis", detail::encode_basis(b.space())}, {"matrix", detail::encode_rows(b.matrix())}}};
}

inline BilinearForm decode_form(const Document& d) {
    expect_kind(d, DocumentKind::form);
    GradedSpace s = detail::decode_basis(detail::member(d.payload, "basis", "payload"), "payload.basis");
    Matrix m = detail::decode_rows(detail::member(d.payload, "matrix", "payload"), s.dim(), s.dim(),
                                   "payload.matrix");
    return {std::move(s), std::move(m)};
}

} // namespace superpoisson::io
