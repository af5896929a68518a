#pragma once

#include "immvar/bounds.hpp"
#include "immvar/character.hpp"
#include "immvar/cyclotomic.hpp"
#include "immvar/perm.hpp"
#include "immvar/permgroup.hpp"
#include "immvar/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace immvar {

// A parsed instance file: the (G, chi, n) triple every subcommand starts
// from, plus the seed and bound overrides. See README.md for the schema.
struct InstanceSpec {
    enum class CharKind { Trivial, Sign, GeneratorExponents, Table };

    int k = 0;
    int n = 0;
    std::vector<Perm> generators; // empty list means the trivial group
    CharKind kind = CharKind::Trivial;
    unsigned m = 1;                       // root-of-unity order for the value fields
    std::vector<long> exponents;          // parallel to generators
    std::vector<CycloNum> table_values;   // indexed like PermGroup::elements()
    std::uint64_t seed = 1;
    Bounds bounds;

    GroupPtr build_group() const;
    Character build_character(const GroupPtr& g) const;
};

InstanceSpec parse_instance_json(const std::string& text);
InstanceSpec load_instance_file(const std::string& path);

// Matrix argument of the immanant subcommand: either explicit rational
// entries or a generic (symbolic) matrix of the given shape.
struct MatrixInput {
    bool generic = false;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rat>> entries; // rows x cols when !generic
};

MatrixInput parse_matrix_json(const std::string& text);
MatrixInput load_matrix_file(const std::string& path);

// {"factors": [[...], ...]} with rational entries as strings.
std::vector<std::vector<Rat>> parse_factors_json(const std::string& text);
std::vector<std::vector<Rat>> load_factors_file(const std::string& path);

// {"members": [[1,1,2], ...]}.
std::vector<MultiIndex> parse_subset_json(const std::string& text);
std::vector<MultiIndex> load_subset_file(const std::string& path);

} // namespace immvar
