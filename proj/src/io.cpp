#include "rcanon/io.hpp"

#include <fstream>
#include <sstream>

#include "rcanon/errors.hpp"

namespace rcanon::io {

namespace {

double number(const json& j, const char* what) {
    if (!j.is_number())
        throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

json entry_to_json(const Scalar& x, FieldTag field) {
    switch (field) {
    case FieldTag::R: return x.a;
    case FieldTag::C: return json::array({x.a, x.b});
    case FieldTag::H: break;
    }
    return json::array({x.a, x.b, x.c, x.d});
}

Scalar entry_from_json(const json& j, FieldTag field) {
    if (field == FieldTag::R) {
        if (!j.is_number())
            throw ParseError("real entries must be numbers");
        return j.get<double>();
    }
    const std::size_t arity = field == FieldTag::C ? 2 : 4;
    if (!j.is_array() || j.size() != arity)
        throw ParseError(std::string(to_string(field)) + " entries must be arrays of " + std::to_string(arity) +
                         " numbers");
    Scalar x;
    double* parts[] = {&x.a, &x.b, &x.c, &x.d};
    for (std::size_t k = 0; k < arity; ++k)
        *parts[k] = number(j[k], "entry component");
    return x;
}

FieldTag parse_field(const std::string& s) {
    if (s == "R")
        return FieldTag::R;
    if (s == "C")
        return FieldTag::C;
    if (s == "H")
        return FieldTag::H;
    throw ParseError("unknown field '" + s + "'");
}

InvolutionTag parse_involution(const std::string& s) {
    for (auto t : {InvolutionTag::Identity, InvolutionTag::ComplexConj, InvolutionTag::QuatConj,
                   InvolutionTag::QuatSemiconj})
        if (to_string(t) == s)
            return t;
    throw ParseError("unknown involution '" + s + "'");
}

json index_to_json(EigIndex x) { return x.is_zero() ? json("zero") : json(x.residue()); }

EigIndex index_from_json(const json& j, int m) {
    if (j.is_string() && j.get<std::string>() == "zero")
        return EigIndex::zero();
    if (!j.is_number_integer())
        throw ParseError("index must be \"zero\" or an integer");
    const long k = j.get<long>();
    if (k < 0 || k >= m)
        throw ParseError("index " + std::to_string(k) + " outside [0, " + std::to_string(m) + ")");
    return EigIndex::root(k, m);
}

template <typename T>
T required(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field '") + key + "' has the wrong type");
    }
}

CaseTag case_from_json(const json& j) {
    const int r = required<int>(j, "r");
    require_exponent(r);
    return {parse_case_kind(required<std::string>(j, "case")), r};
}

} // namespace

json matrix_to_json(const Mat& m, FieldTag field) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(entry_to_json(m(i, k), field));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const json& j, FieldTag field) {
    if (!j.is_array())
        throw ParseError("matrix must be an array of rows");
    const std::size_t n = j.size();
    const std::size_t cols = n ? (j[0].is_array() ? j[0].size() : 0) : 0;
    Mat m(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix rows must be arrays of equal length");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = entry_from_json(j[i][k], field);
    }
    return m;
}

std::string_view form_name(InvolutionTag inv, int epsilon) {
    const bool sesqui = inv != InvolutionTag::Identity;
    if (epsilon > 0)
        return sesqui ? "hermitian" : "symmetric";
    return sesqui ? "skewhermitian" : "skew";
}

json pair_to_json(const MatrixPair& p) {
    const auto& c = p.context;
    json j;
    j["field"] = std::string(to_string(c.field));
    j["involution"] = std::string(to_string(c.involution));
    j["form"] = std::string(form_name(c.involution, c.epsilon));
    j["r"] = c.r;
    j["A"] = matrix_to_json(p.a, c.field);
    j["F"] = matrix_to_json(p.f, c.field);
    j["tolerances"] = {{"relation", p.tolerances.relation}, {"snap", p.tolerances.snap}, {"rank", p.tolerances.rank}};
    return j;
}

MatrixPair pair_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("pair document must be an object");
    MatrixPair p;
    auto& c = p.context;
    c.field = parse_field(required<std::string>(j, "field"));
    c.involution = parse_involution(required<std::string>(j, "involution"));
    const std::string form = required<std::string>(j, "form");
    if (form == "symmetric" || form == "hermitian")
        c.epsilon = 1;
    else if (form == "skew" || form == "skewhermitian")
        c.epsilon = -1;
    else
        throw ParseError("unknown form '" + form + "'");
    if (form_name(c.involution, c.epsilon) != form)
        throw ContextError("form '" + form + "' does not match involution '" +
                           std::string(to_string(c.involution)) + "'");
    c.r = required<int>(j, "r");
    require_exponent(c.r);
    require_legal(c.field, c.involution);
    (void)classify_case(c.field, c.involution, c.epsilon, c.r);
    if (!j.contains("A") || !j.contains("F"))
        throw ParseError("pair document needs A and F");
    p.a = matrix_from_json(j["A"], c.field);
    p.f = matrix_from_json(j["F"], c.field);
    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        if (!t.is_object())
            throw ParseError("tolerances must be an object");
        if (t.contains("relation"))
            p.tolerances.relation = number(t["relation"], "tolerances.relation");
        if (t.contains("snap"))
            p.tolerances.snap = number(t["snap"], "tolerances.snap");
        if (t.contains("rank"))
            p.tolerances.rank = number(t["rank"], "tolerances.rank");
    }
    return p;
}

json block_to_json(const CanonicalBlock& b) {
    json j;
    j["kind"] = b.kind == BlockKind::One ? "one" : "two";
    j["index"] = index_to_json(b.index);
    if (b.kind == BlockKind::One) {
        j["scalar"] = std::string(to_string(b.scalar));
    } else {
        j["rule"] = std::string(to_string(b.rule));
        j["partner"] = index_to_json(b.partner);
        j["off_sign"] = b.off_sign;
    }
    j["realified"] = b.realified;
    return j;
}

CanonicalBlock block_from_json(const json& j, int m) {
    const std::string kind = required<std::string>(j, "kind");
    const EigIndex x = index_from_json(j.contains("index") ? j["index"] : json(), m);
    const bool realified = j.contains("realified") ? required<bool>(j, "realified") : false;
    if (kind == "one")
        return CanonicalBlock::one(x, parse_form_scalar(required<std::string>(j, "scalar")), realified);
    if (kind != "two")
        throw ParseError("block kind must be \"one\" or \"two\"");
    const std::string rule = required<std::string>(j, "rule");
    if (rule != "powr" && rule != "conjpowr")
        throw ParseError("unknown partner rule '" + rule + "'");
    const int off = required<int>(j, "off_sign");
    if (off != 1 && off != -1)
        throw ParseError("off_sign must be +1 or -1");
    return CanonicalBlock::two(x, rule == "powr" ? PartnerRule::PowR : PartnerRule::ConjPowR,
                               index_from_json(j.contains("partner") ? j["partner"] : json(), m), off, realified);
}

json form_to_json(const CanonicalForm& cf) {
    json j;
    j["case"] = std::string(to_string(cf.case_tag.kind));
    j["r"] = cf.case_tag.r;
    j["m"] = root_modulus(cf.case_tag.r);
    json blocks = json::array();
    for (const auto& b : cf.blocks)
        blocks.push_back(block_to_json(b));
    j["blocks"] = std::move(blocks);
    return j;
}

CanonicalForm form_from_json(const json& j) {
    CanonicalForm cf;
    cf.case_tag = case_from_json(j);
    const int m = root_modulus(cf.case_tag.r);
    if (j.contains("m") && required<int>(j, "m") != m)
        throw ParseError("m does not equal r^2 - 1");
    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw ParseError("missing block list");
    for (const auto& b : j["blocks"])
        cf.blocks.push_back(block_from_json(b, m));
    return cf;
}

json canonicalization_to_json(const Canonicalization& c) {
    json j = form_to_json(c.form);
    j["witness"] = {{"S", matrix_to_json(c.witness.s, field_of(c.form.case_tag.kind))},
                    {"residual_similarity", c.witness.residual_similarity},
                    {"residual_congruence", c.witness.residual_congruence}};
    return j;
}

Canonicalization canonicalization_from_json(const json& j) {
    Canonicalization c;
    c.form = form_from_json(j);
    if (j.contains("witness")) {
        const json& w = j["witness"];
        c.witness.s = matrix_from_json(w.contains("S") ? w["S"] : json::array(), field_of(c.form.case_tag.kind));
        c.witness.residual_similarity = number(w.value("residual_similarity", json(0.0)), "residual_similarity");
        c.witness.residual_congruence = number(w.value("residual_congruence", json(0.0)), "residual_congruence");
    }
    return c;
}

json report_to_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e = {{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"derived", c.derived}};
        if (!c.message.empty())
            e["message"] = c.message;
        checks.push_back(std::move(e));
    }
    return {{"passed", rep.passed()}, {"checks", std::move(checks)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw ParseError("cannot write '" + path + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace rcanon::io
