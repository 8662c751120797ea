#include "lrc/codefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lrc::codefile {

using nlohmann::json;

CodeFile wrap(construction::LinearLrcCode code) {
    CodeFile f;
    f.kind = Kind::Linear;
    f.params = code.params;
    f.seed = code.seed;
    f.linear = std::move(code);
    return f;
}

CodeFile wrap(f4family::OperatorMatrix matrix, int r_claimed,
              std::vector<std::vector<int>> repair_sets, std::uint64_t seed) {
    CodeFile f;
    f.kind = Kind::Operator;
    f.params = construction::CodeParams{matrix.n, matrix.k, r_claimed, 4};
    f.seed = seed;
    if (!repair_sets.empty()) f.repair_sets = std::move(repair_sets);
    f.op_matrix = std::move(matrix);
    return f;
}

namespace {

json field_to_json(const gf::FieldSpec& spec) {
    json j;
    j["p"] = spec.p;
    j["m"] = spec.m;
    if (spec.m > 1) j["modulus"] = spec.modulus;
    else j["modulus"] = nullptr;
    return j;
}

gf::FieldSpec field_from_json(const json& j) {
    gf::FieldSpec spec;
    spec.p = j.at("p").get<std::uint32_t>();
    spec.m = j.at("m").get<std::uint32_t>();
    if (!j.at("modulus").is_null()) spec.modulus = j.at("modulus").get<std::uint64_t>();
    return spec;
}

json matrix_payload(const f4family::OperatorMatrix& m) {
    if (m.family != f4family::Family::Custom)
        return json{{"family", f4family::family_name(m.family)}, {"i", m.block_index}};
    json rows = json::array();
    for (int r = 0; r < m.k; ++r) {
        json row = json::array();
        for (int c = 0; c < m.n; ++c) row.push_back(f4family::op_name(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"ops", std::move(rows)}};
}

f4family::OperatorMatrix matrix_from_payload(const json& j) {
    if (j.contains("family")) {
        const auto fam = f4family::family_from_name(j.at("family").get<std::string>());
        if (!fam || *fam == f4family::Family::Custom)
            throw ParseError("unknown operator family in code file");
        return f4family::family_matrix(*fam, j.at("i").get<int>());
    }
    const auto& rows = j.at("ops");
    f4family::OperatorMatrix m;
    m.k = static_cast<int>(rows.size());
    if (m.k == 0) throw ParseError("empty operator grid");
    m.n = static_cast<int>(rows.at(0).size());
    m.ops.resize(std::size_t(m.k) * m.n);
    for (int r = 0; r < m.k; ++r) {
        if (static_cast<int>(rows.at(r).size()) != m.n)
            throw ParseError("ragged operator grid");
        for (int c = 0; c < m.n; ++c) {
            const auto op = f4family::op_from_name(rows.at(r).at(c).get<std::string>());
            if (!op) throw ParseError("unknown operator name in grid");
            m.at(r, c) = *op;
        }
    }
    return m;
}

}  // namespace

std::string serialize(const CodeFile& file) {
    json j;
    j["format"] = kFormatVersion;
    j["kind"] = file.kind == Kind::Linear ? "linear" : "operator";
    j["params"] = {{"n", file.params.n}, {"k", file.params.k}, {"r", file.params.r},
                   {"q", file.params.q}};
    j["provenance"] = {{"seed", file.seed}, {"tool", file.tool}};

    if (file.kind == Kind::Linear) {
        const auto& code = *file.linear;
        j["field"] = field_to_json(code.generator.field()->spec());
        json rows = json::array();
        for (int r = 0; r < code.generator.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < code.generator.cols(); ++c)
                row.push_back(code.generator.at(r, c));
            rows.push_back(std::move(row));
        }
        j["generator"] = std::move(rows);
        j["groups"] = code.groups;
        if (code.replicated())
            j["replica"] = {{"source", code.replica_source}, {"column", code.replica_col}};
        else
            j["replica"] = nullptr;
    } else {
        j["field"] = field_to_json(gf::Field::f4()->spec());
        j["matrix"] = matrix_payload(*file.op_matrix);
        if (file.repair_sets) j["repair_sets"] = *file.repair_sets;
        else j["repair_sets"] = nullptr;
    }
    return j.dump(2) + "\n";
}

CodeFile parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (j.at("format").get<int>() != kFormatVersion)
            throw ParseError("unsupported code file format version");
        CodeFile file;
        const std::string kind = j.at("kind").get<std::string>();
        file.params.n = j.at("params").at("n").get<int>();
        file.params.k = j.at("params").at("k").get<int>();
        file.params.r = j.at("params").at("r").get<int>();
        file.params.q = j.at("params").at("q").get<std::uint64_t>();
        file.seed = j.at("provenance").at("seed").get<std::uint64_t>();
        file.tool = j.at("provenance").at("tool").get<std::string>();

        if (kind == "linear") {
            file.kind = Kind::Linear;
            if (j.contains("matrix") || j.contains("ops"))
                throw ParseError("linear code file carries an operator payload");
            const auto spec = field_from_json(j.at("field"));
            auto field = gf::Field::from_spec(spec);
            const auto& rows = j.at("generator");
            const int k = static_cast<int>(rows.size());
            if (k != file.params.k) throw ParseError("generator row count != k");
            const int n = k > 0 ? static_cast<int>(rows.at(0).size()) : 0;
            if (n != file.params.n) throw ParseError("generator column count != n");
            linalg::Matrix gen(field, k, n);
            for (int r = 0; r < k; ++r) {
                if (static_cast<int>(rows.at(r).size()) != n)
                    throw ParseError("ragged generator matrix");
                for (int c = 0; c < n; ++c) {
                    const auto v = rows.at(r).at(c).get<std::uint64_t>();
                    if (v >= field->q()) throw ParseError("generator entry outside field");
                    gen.at(r, c) = static_cast<gf::Elem>(v);
                }
            }
            construction::LinearLrcCode code{file.params, std::move(gen),
                                             j.at("groups").get<std::vector<std::vector<int>>>(),
                                             -1, -1, file.seed};
            if (!j.at("replica").is_null()) {
                code.replica_source = j.at("replica").at("source").get<int>();
                code.replica_col = j.at("replica").at("column").get<int>();
            }
            file.linear = std::move(code);
            return file;
        }
        if (kind == "operator") {
            file.kind = Kind::Operator;
            if (j.contains("generator") || j.contains("groups"))
                throw ParseError("operator code file carries a linear payload");
            const auto spec = field_from_json(j.at("field"));
            if (!(spec == gf::Field::f4()->spec()))
                throw ParseError("operator code files are defined over F4");
            file.op_matrix = matrix_from_payload(j.at("matrix"));
            if (file.op_matrix->n != file.params.n || file.op_matrix->k != file.params.k)
                throw ParseError("operator matrix shape disagrees with params");
            if (!j.at("repair_sets").is_null())
                file.repair_sets = j.at("repair_sets").get<std::vector<std::vector<int>>>();
            return file;
        }
        throw ParseError("unknown code file kind");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed code file: ") + e.what());
    }
}

void save(const CodeFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << serialize(file);
    if (!out) throw ParseError("write failed: " + path);
}

CodeFile load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool equal(const CodeFile& a, const CodeFile& b) {
    if (a.kind != b.kind || !(a.params == b.params) || a.seed != b.seed || a.tool != b.tool)
        return false;
    if (a.kind == Kind::Linear) {
        const auto& x = *a.linear;
        const auto& y = *b.linear;
        return x.generator == y.generator && x.groups == y.groups &&
               x.replica_source == y.replica_source && x.replica_col == y.replica_col;
    }
    return *a.op_matrix == *b.op_matrix && a.repair_sets == b.repair_sets;
}

}  // namespace lrc::codefile
