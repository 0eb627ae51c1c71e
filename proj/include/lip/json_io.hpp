#pragma once

// JSON encoding of the library's values. Integers and rationals are always
// decimal strings ("-12", "5/2"); object keys keep insertion order so the
// output is byte-stable. Every to_json has a matching *_from_json.

#include <nlohmann/json.hpp>

#include "lip/continuation.hpp"
#include "lip/gluing.hpp"

namespace lip {

using Json = nlohmann::ordered_json;

namespace json {

inline Json integer(const Integer& v) { return v.str(); }
inline Json rational(const Rational& q) { return to_string(q); }

// Accepts decimal strings, and plain JSON integers for convenience.
inline Integer to_integer(const Json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    throw ParseError("expected an integer (decimal string), got " + j.dump());
}

inline Rational to_rational(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    return Rational(to_integer(j));
}

inline std::size_t to_index(const Json& j) { return to_unsigned(to_integer(j), "index"); }

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field \"") + key + "\"");
    return j.at(key);
}

inline const Json& array_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw ParseError(std::string("JSON field \"") + key + "\" must be an array");
    return v;
}

inline std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw ParseError(std::string("JSON field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

inline Json integers(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer(x));
    return out;
}

inline std::vector<Integer> to_integers(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(to_integer(x));
    return out;
}

// Polynomials

template <class Coeff>
Json polynomial(const Polynomial<Coeff>& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"coeffs", coeffs}};
}

inline IntPolynomial int_polynomial_from(const Json& j) { return IntPolynomial(to_integers(array_field(j, "coeffs"))); }

inline RatPolynomial rat_polynomial_from(const Json& j) {
    std::vector<Rational> c;
    for (const auto& v : array_field(j, "coeffs")) c.push_back(to_rational(v));
    return RatPolynomial(std::move(c));
}

// Samples: [["x","y"], ...]

inline Json sample(const Sample& s) {
    Json out = Json::array();
    for (const auto& p : s) out.push_back(Json::array({integer(p.x), integer(p.y)}));
    return out;
}

inline Sample sample_from(const Json& j) {
    if (!j.is_array()) throw ParseError("sample must be an array of [x, y] pairs");
    std::vector<Point> pts;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw ParseError("sample point must be [x, y], got " + p.dump());
        pts.push_back({to_integer(p[0]), to_integer(p[1])});
    }
    return Sample(std::move(pts));
}

// Function specs

inline Json function_spec(const FunctionSpec& spec) {
    struct Visitor {
        Json operator()(const IntPolynomial& p) const {
            Json out{{"kind", "poly"}};
            out["coeffs"] = polynomial(p)["coeffs"];
            return out;
        }
        Json operator()(const NewtonSeries& ns) const {
            return Json{{"kind", "newton"}, {"sigma", integers(ns.enumeration().prefix())}, {"coeffs", integers(ns.coeffs())}};
        }
        Json operator()(const Sample& s) const { return Json{{"kind", "sample"}, {"points", sample(s)}}; }
        Json operator()(const AlternatingFactorialSeries&) const { return Json{{"kind", "catalog"}, {"name", "example1"}}; }
        Json operator()(const ChainProduct& c) const {
            Json out{{"kind", "catalog"}, {"name", "chain"}, {"m", integer(c.m)}};
            if (c.sigma) out["sigma"] = integers(c.sigma->prefix());
            return out;
        }
        Json operator()(const TauConstruction& t) const {
            return Json{{"kind", "catalog"}, {"name", "tau"}, {"c", integers(t.c)}};
        }
        Json operator()(const Triangular&) const { return Json{{"kind", "catalog"}, {"name", "triangular"}}; }
        Json operator()(const HalfSquare&) const { return Json{{"kind", "catalog"}, {"name", "halfsquare"}}; }
    };
    return std::visit(Visitor{}, spec);
}

inline FunctionSpec function_spec_from(const Json& j) {
    std::string kind = string_field(j, "kind");
    if (kind == "poly") return int_polynomial_from(j);
    if (kind == "newton") {
        return NewtonSeries(Enumeration(to_integers(array_field(j, "sigma"))), to_integers(array_field(j, "coeffs")));
    }
    if (kind == "sample") return sample_from(field(j, "points"));
    if (kind != "catalog") throw ParseError("unknown function kind \"" + kind + "\"");
    std::string name = string_field(j, "name");
    if (name == "example1") return AlternatingFactorialSeries{};
    if (name == "triangular") return Triangular{};
    if (name == "halfsquare") return HalfSquare{};
    if (name == "chain") {
        ChainProduct c;
        if (j.contains("m")) c.m = to_integer(j.at("m"));
        if (j.contains("sigma")) c.sigma = Enumeration(to_integers(j.at("sigma")));
        return c;
    }
    if (name == "tau") return TauConstruction{to_integers(array_field(j, "c"))};
    throw ParseError("unknown catalog function \"" + name + "\"");
}

inline FunctionSpec parse_function_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("function spec is not valid JSON: ") + e.what());
    }
    return function_spec_from(j);
}

// Verdicts and circuits

inline Json circuit(const Circuit& c) {
    return Json{{"elements", integers(c.elements)},
                {"leading_coeff", rational(c.leading_coeff)},
                {"denominator", integer(c.denominator)}};
}

inline Circuit circuit_from(const Json& j) {
    return Circuit{to_integers(array_field(j, "elements")), to_rational(field(j, "leading_coeff")),
                   to_integer(field(j, "denominator"))};
}

inline Json verdict(const LipVerdict& v) {
    if (auto* ok = std::get_if<Consistent>(&v)) return Json{{"verdict", "Consistent"}, {"witness", polynomial(ok->witness)}};
    return Json{{"verdict", "Inconsistent"}, {"circuit", circuit(std::get<Inconsistent>(v).circuit)}};
}

inline LipVerdict verdict_from(const Json& j) {
    std::string v = string_field(j, "verdict");
    if (v == "Consistent") return Consistent{int_polynomial_from(field(j, "witness"))};
    if (v == "Inconsistent") return Inconsistent{circuit_from(field(j, "circuit"))};
    throw ParseError("unknown verdict \"" + v + "\"");
}

// Newton decompositions

inline Json newton_decomposition(const NewtonDecomposition& d) {
    if (auto* ns = std::get_if<NewtonSeries>(&d)) {
        return Json{{"status", "Integer"}, {"sigma", integers(ns->enumeration().prefix())}, {"coeffs", integers(ns->coeffs())}};
    }
    const auto& f = std::get<NewtonFailure>(d);
    return Json{{"status", "NonInteger"}, {"index", std::to_string(f.index)}, {"value", rational(f.value)}};
}

inline NewtonDecomposition newton_decomposition_from(const Json& j) {
    std::string s = string_field(j, "status");
    if (s == "Integer") {
        return NewtonSeries(Enumeration(to_integers(array_field(j, "sigma"))), to_integers(array_field(j, "coeffs")));
    }
    if (s == "NonInteger") return NewtonFailure{to_index(field(j, "index")), to_rational(field(j, "value"))};
    throw ParseError("unknown decomposition status \"" + s + "\"");
}

// Progressions, extension classes

inline Json progression(const Progression& p) {
    return Json{{"first", integer(p.first())},
                {"step", integer(p.step())},
                {"domain", p.is_two_sided() ? "two_sided" : "nonneg"}};
}

inline Progression progression_from(const Json& j) {
    std::string dom = string_field(j, "domain");
    Integer a = to_integer(field(j, "first")), d = to_integer(field(j, "step"));
    if (dom == "two_sided") return Progression::two_sided(a, d);
    if (dom == "nonneg") return Progression::ascending(a, d);
    throw ParseError("unknown progression domain \"" + dom + "\"");
}

inline Json extension_class(const ExtensionClass& c) { return Json{{"rep", integer(c.rep)}, {"mod", integer(c.mod)}}; }

inline ExtensionClass extension_class_from(const Json& j) {
    return ExtensionClass{to_integer(field(j, "rep")), to_integer(field(j, "mod"))};
}

inline Json obstructed(const ObstructedPoint& o) {
    return Json{{"status", "Obstructed"},
                {"point", integer(o.point())},
                {"obstruction", progression(o.obstruction())},
                {"on_obstruction_progression", o.on_obstruction_progression()}};
}

// Sets

inline Json meet_verdict(const MeetVerdict& v) {
    if (auto* inf = std::get_if<InfinitelyMany>(&v)) {
        return Json{{"verdict", "InfinitelyMany"}, {"witness", progression(inf->witness)}};
    }
    if (std::holds_alternative<FinitelyMany>(v)) return Json{{"verdict", "FinitelyMany"}};
    return Json{{"verdict", "Unknown"}, {"search_bound", integer(std::get<Unknown>(v).search_bound)}};
}

inline MeetVerdict meet_verdict_from(const Json& j) {
    std::string v = string_field(j, "verdict");
    if (v == "InfinitelyMany") return InfinitelyMany{progression_from(field(j, "witness"))};
    if (v == "FinitelyMany") return FinitelyMany{};
    if (v == "Unknown") return Unknown{to_integer(field(j, "search_bound"))};
    throw ParseError("unknown meet verdict \"" + v + "\"");
}

inline Json residues(const std::vector<std::int64_t>& r) {
    Json out = Json::array();
    for (auto v : r) out.push_back(std::to_string(v));
    return out;
}

inline Json normal_set(const NormalSet& n) {
    return Json{{"ground", to_string(n.ground())},
                {"modulus", std::to_string(n.modulus())},
                {"residues", residues(n.residues())},
                {"nonpositive_residues", residues(n.nonpositive_residues())},
                {"primes_filter", n.primes_filter()},
                {"added", integers(n.added())},
                {"removed", integers(n.removed())}};
}

inline NormalSet normal_set_from(const Json& j) {
    std::int64_t L = to_int64(to_integer(field(j, "modulus")), "modulus");
    if (L < 1) throw ParseError("normal set modulus must be >= 1");
    auto mask = [&](const char* key) {
        NormalSet::Mask m(static_cast<std::size_t>(L));
        for (const auto& r : to_integers(array_field(j, key))) {
            if (r < 0 || r >= L) throw ParseError("residue " + r.str() + " out of range");
            m[r.convert_to<std::size_t>()] = 1;
        }
        return m;
    };
    const Json& primes = field(j, "primes_filter");
    if (!primes.is_boolean()) throw ParseError("primes_filter must be a boolean");
    return NormalSet(L, mask("residues"), mask("nonpositive_residues"), to_integers(array_field(j, "added")),
                     to_integers(array_field(j, "removed")), primes.get<bool>());
}

// Gluing

inline Json gluing_family(const GluingFamily& fam) {
    Json pieces = Json::array();
    for (const auto& p : fam.pieces) pieces.push_back(Json{{"set", to_string(*p.carrier)}, {"fn", function_spec(p.fn)}});
    return Json{{"window", Json::array({integer(fam.window.lo), integer(fam.window.hi)})}, {"pieces", pieces}};
}

inline GluingFamily gluing_family_from(const Json& j) {
    const Json& w = array_field(j, "window");
    if (w.size() != 2) throw ParseError("window must be [lo, hi]");
    GluingFamily fam{{}, make_window(to_integer(w[0]), to_integer(w[1]))};
    for (const auto& p : array_field(j, "pieces")) {
        fam.pieces.push_back(Piece{parse_set(string_field(p, "set")), function_spec_from(field(p, "fn"))});
    }
    if (fam.pieces.empty()) throw ParseError("gluing family needs at least one piece");
    return fam;
}

inline Json precondition(const PreconditionResult& r) {
    if (std::holds_alternative<PreconditionOk>(r)) return Json{{"status", "OK"}};
    const auto& v = std::get<Violation>(r);
    return Json{{"status", "Violation"},
                {"piece1", std::to_string(v.piece1)},
                {"piece2", std::to_string(v.piece2)},
                {"a1", integer(v.a1)},
                {"a2", integer(v.a2)},
                {"meet", meet_verdict(v.verdict)}};
}

inline PreconditionResult precondition_from(const Json& j) {
    std::string s = string_field(j, "status");
    if (s == "OK") return PreconditionOk{};
    if (s != "Violation") throw ParseError("unknown precondition status \"" + s + "\"");
    return Violation{to_index(field(j, "piece1")), to_index(field(j, "piece2")), to_integer(field(j, "a1")),
                     to_integer(field(j, "a2")), meet_verdict_from(field(j, "meet"))};
}

inline Json agreement(const AgreementResult& r) {
    if (std::holds_alternative<AgreementOk>(r)) return Json{{"status", "OK"}};
    const auto& m = std::get<Mismatch>(r);
    return Json{{"status", "Mismatch"},
                {"x", integer(m.x)},
                {"piece1", std::to_string(m.piece1)},
                {"piece2", std::to_string(m.piece2)},
                {"y1", integer(m.y1)},
                {"y2", integer(m.y2)}};
}

inline AgreementResult agreement_from(const Json& j) {
    std::string s = string_field(j, "status");
    if (s == "OK") return AgreementOk{};
    if (s != "Mismatch") throw ParseError("unknown agreement status \"" + s + "\"");
    return Mismatch{to_integer(field(j, "x")), to_index(field(j, "piece1")), to_index(field(j, "piece2")),
                    to_integer(field(j, "y1")), to_integer(field(j, "y2"))};
}

// Absent fields are null.
inline Json gluing_report(const GluingReport& r) {
    Json pieces = Json::array();
    for (const auto& v : r.piece_verdicts) pieces.push_back(verdict(v));
    return Json{{"precondition", r.precondition ? precondition(*r.precondition) : Json()},
                {"agreement", r.agreement ? agreement(*r.agreement) : Json()},
                {"pieces", pieces},
                {"verdict", r.verdict ? verdict(*r.verdict) : Json()}};
}

inline GluingReport gluing_report_from(const Json& j) {
    GluingReport r;
    if (!field(j, "precondition").is_null()) r.precondition = precondition_from(j.at("precondition"));
    if (!field(j, "agreement").is_null()) r.agreement = agreement_from(j.at("agreement"));
    for (const auto& v : array_field(j, "pieces")) r.piece_verdicts.push_back(verdict_from(v));
    if (!field(j, "verdict").is_null()) r.verdict = verdict_from(j.at("verdict"));
    return r;
}

}  // namespace json
}  // namespace lip
