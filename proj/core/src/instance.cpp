#include "immvar/instance.hpp"

#include "immvar/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace immvar {

namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const json& field(const json& obj, const char* name) {
    if (!obj.is_object())
        throw ParseError(std::string("expected an object around field \"") + name + "\"");
    auto it = obj.find(name);
    if (it == obj.end())
        throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

int int_field(const json& obj, const char* name) {
    const json& v = field(obj, name);
    if (!v.is_number_integer())
        throw ParseError(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

Rat rat_value(const json& v, const char* where) {
    if (v.is_number_integer())
        return Rat(v.get<long long>());
    if (v.is_string()) {
        try {
            return parse_rat(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(std::string(where) + ": " + e.what());
        }
    }
    throw ParseError(std::string(where) + ": expected an integer or a \"p/q\" string");
}

CycloNum cyclo_value(const json& v, unsigned m, const char* where) {
    if (v.is_array()) {
        std::vector<Rat> coeffs;
        coeffs.reserve(v.size());
        for (const auto& c : v)
            coeffs.push_back(rat_value(c, where));
        return CycloNum::from_coeffs(m, std::move(coeffs));
    }
    return CycloNum(rat_value(v, where));
}

void read_bounds(const json& obj, Bounds& bounds) {
    static const char* known[] = {"enumeration", "group_table",      "relabel_n",
                                  "ideal_cap",   "shell_facet_cap",  "shell_step_budget",
                                  "poset_work"};
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* name : known)
            ok = ok || it.key() == name;
        if (!ok)
            throw ParseError("unknown bounds field \"" + it.key() + "\"");
        if (!it.value().is_number_unsigned())
            throw ParseError("bounds field \"" + it.key() + "\" must be a non-negative integer");
    }
    if (obj.contains("enumeration"))
        bounds.enumeration = obj["enumeration"].get<std::uint64_t>();
    if (obj.contains("group_table"))
        bounds.group_table = obj["group_table"].get<std::size_t>();
    if (obj.contains("relabel_n"))
        bounds.relabel_n = obj["relabel_n"].get<int>();
    if (obj.contains("ideal_cap"))
        bounds.ideal_cap = obj["ideal_cap"].get<std::uint64_t>();
    if (obj.contains("shell_facet_cap"))
        bounds.shell_facet_cap = obj["shell_facet_cap"].get<std::size_t>();
    if (obj.contains("shell_step_budget"))
        bounds.shell_step_budget = obj["shell_step_budget"].get<std::uint64_t>();
    if (obj.contains("poset_work"))
        bounds.poset_work = obj["poset_work"].get<std::uint64_t>();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

GroupPtr InstanceSpec::build_group() const {
    return std::make_shared<const PermGroup>(PermGroup::closure(k, generators, bounds));
}

Character InstanceSpec::build_character(const GroupPtr& g) const {
    switch (kind) {
    case CharKind::Trivial:
        return Character::trivial(g);
    case CharKind::Sign:
        return Character::sign(g);
    case CharKind::GeneratorExponents: {
        std::vector<std::pair<Perm, long>> pairs;
        pairs.reserve(generators.size());
        for (std::size_t i = 0; i < generators.size(); ++i)
            pairs.emplace_back(generators[i], exponents[i]);
        return Character::from_generator_exponents(g, m, pairs);
    }
    case CharKind::Table:
        return Character::table(g, m, table_values);
    }
    throw InvalidArgumentError("InstanceSpec: unknown character kind");
}

InstanceSpec parse_instance_json(const std::string& text) {
    json doc = parse_document(text, "instance");
    InstanceSpec spec;
    spec.k = int_field(doc, "k");
    spec.n = int_field(doc, "n");
    if (spec.k < 1)
        throw ParseError("field \"k\" must be at least 1");
    if (spec.n < 1)
        throw ParseError("field \"n\" must be at least 1");

    const json& gens = field(doc, "generators");
    if (!gens.is_array())
        throw ParseError("field \"generators\" must be an array of one-line permutations");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const json& g = gens[i];
        std::ostringstream where;
        where << "generators[" << i << "]";
        try {
            if (g.is_string()) {
                spec.generators.push_back(Perm::parse(g.get<std::string>()));
            } else if (g.is_array()) {
                std::vector<int> one_line;
                for (const auto& entry : g) {
                    if (!entry.is_number_integer())
                        throw ParseError(where.str() + ": entries must be integers");
                    one_line.push_back(entry.get<int>());
                }
                spec.generators.push_back(Perm::from_one_line(one_line));
            } else {
                throw ParseError(where.str() + ": expected a string or an array");
            }
        } catch (const InvalidArgumentError& e) {
            throw ParseError(where.str() + ": " + e.what());
        }
        if (spec.generators.back().k() != spec.k)
            throw ParseError(where.str() + ": permutation degree does not match k");
    }

    const json& ch = field(doc, "character");
    const json& type_field = field(ch, "type");
    if (!type_field.is_string())
        throw ParseError("character field \"type\" must be a string");
    std::string type = type_field.get<std::string>();
    if (type == "trivial") {
        spec.kind = InstanceSpec::CharKind::Trivial;
    } else if (type == "sign") {
        spec.kind = InstanceSpec::CharKind::Sign;
    } else if (type == "generator_exponents") {
        spec.kind = InstanceSpec::CharKind::GeneratorExponents;
        int m = int_field(ch, "m");
        if (m < 1)
            throw ParseError("character field \"m\" must be at least 1");
        spec.m = static_cast<unsigned>(m);
        const json& exps = field(ch, "exponents");
        if (!exps.is_array() || exps.size() != spec.generators.size())
            throw ParseError("character field \"exponents\" must be an array parallel to "
                             "\"generators\"");
        for (const auto& e : exps) {
            if (!e.is_number_integer())
                throw ParseError("character exponents must be integers");
            spec.exponents.push_back(e.get<long>());
        }
    } else if (type == "table") {
        spec.kind = InstanceSpec::CharKind::Table;
        int m = int_field(ch, "m");
        if (m < 1)
            throw ParseError("character field \"m\" must be at least 1");
        spec.m = static_cast<unsigned>(m);
        const json& values = field(ch, "values");
        if (!values.is_array())
            throw ParseError("character field \"values\" must be an array indexed like the "
                             "lex-sorted group elements");
        for (const auto& v : values)
            spec.table_values.push_back(cyclo_value(v, spec.m, "character values"));
    } else {
        throw ParseError("unknown character type \"" + type + "\"");
    }

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned())
            throw ParseError("field \"seed\" must be a non-negative integer");
        spec.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("bounds")) {
        if (!doc["bounds"].is_object())
            throw ParseError("field \"bounds\" must be an object");
        read_bounds(doc["bounds"], spec.bounds);
    }

    static const char* known[] = {"k", "n", "generators", "character", "seed", "bounds"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = false;
        for (const char* name : known)
            ok = ok || it.key() == name;
        if (!ok)
            throw ParseError("unknown field \"" + it.key() + "\"");
    }
    return spec;
}

InstanceSpec load_instance_file(const std::string& path) {
    return parse_instance_json(slurp(path));
}

MatrixInput parse_matrix_json(const std::string& text) {
    json doc = parse_document(text, "matrix");
    MatrixInput input;
    if (doc.contains("generic")) {
        const json& g = doc["generic"];
        input.generic = true;
        input.rows = int_field(g, "rows");
        input.cols = int_field(g, "cols");
    } else {
        input.rows = int_field(doc, "rows");
        input.cols = int_field(doc, "cols");
        const json& entries = field(doc, "entries");
        if (!entries.is_array() || entries.size() != static_cast<std::size_t>(input.rows))
            throw ParseError("matrix field \"entries\" must be an array of \"rows\" rows");
        for (const auto& row : entries) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(input.cols))
                throw ParseError("matrix rows must be arrays of \"cols\" entries");
            std::vector<Rat> out;
            out.reserve(row.size());
            for (const auto& entry : row)
                out.push_back(rat_value(entry, "matrix entries"));
            input.entries.push_back(std::move(out));
        }
    }
    if (input.rows < 1 || input.cols < 1)
        throw ParseError("matrix dimensions must be at least 1");
    return input;
}

MatrixInput load_matrix_file(const std::string& path) {
    return parse_matrix_json(slurp(path));
}

std::vector<std::vector<Rat>> parse_factors_json(const std::string& text) {
    json doc = parse_document(text, "factors");
    const json& factors = field(doc, "factors");
    if (!factors.is_array() || factors.empty())
        throw ParseError("field \"factors\" must be a nonempty array of vectors");
    std::vector<std::vector<Rat>> out;
    for (const auto& f : factors) {
        if (!f.is_array() || f.empty())
            throw ParseError("each factor must be a nonempty array");
        std::vector<Rat> vec;
        vec.reserve(f.size());
        for (const auto& entry : f)
            vec.push_back(rat_value(entry, "factor entries"));
        out.push_back(std::move(vec));
    }
    return out;
}

std::vector<std::vector<Rat>> load_factors_file(const std::string& path) {
    return parse_factors_json(slurp(path));
}

std::vector<MultiIndex> parse_subset_json(const std::string& text) {
    json doc = parse_document(text, "subset");
    const json& members = field(doc, "members");
    if (!members.is_array())
        throw ParseError("field \"members\" must be an array of multi-indices");
    std::vector<MultiIndex> out;
    for (const auto& m : members) {
        if (!m.is_array())
            throw ParseError("each member must be an array of integers");
        std::vector<int> v;
        v.reserve(m.size());
        for (const auto& entry : m) {
            if (!entry.is_number_integer())
                throw ParseError("member entries must be integers");
            v.push_back(entry.get<int>());
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

std::vector<MultiIndex> load_subset_file(const std::string& path) {
    return parse_subset_json(slurp(path));
}

} // namespace immvar
