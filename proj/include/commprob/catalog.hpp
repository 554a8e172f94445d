#pragma once

#include <string>
#include <vector>

#include "commprob/group.hpp"

namespace commprob {

// Textual descriptor of a group source.
struct GroupSpec {
    enum class Kind { Named, PermFile, TableFile };
    Kind kind = Kind::Named;
    std::string text;  // full spec string, e.g. "S4", "perm:gens.txt"
};

GroupSpec parse_group_spec(const std::string& text);

// Named constructors. Recognized grammar (case-insensitive prefixes):
//   C<n>            cyclic of order n
//   D<n>            dihedral on n points (order 2n)
//   Q<n>            generalized quaternion / dicyclic of order n (4 | n)
//   S<k>, A<k>      symmetric / alternating on k points (k <= 6)
//   E<p>^<k>        elementary abelian of order p^k
//   <a>x<b>         direct product
//   perm:<path>     permutation-generator file
//   table:<path>    Cayley-table file
GroupPtr build_group(const GroupSpec& spec, int cap = kDefaultOrderCap);
GroupPtr build_group(const std::string& text, int cap = kDefaultOrderCap);

// Individual builders; all produce canonical breadth-first numbering.
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int order);                // order = 2n
GroupPtr generalized_quaternion_group(int order);  // order = 4n
GroupPtr symmetric_group(int k);                   // k <= 6
GroupPtr alternating_group(int k);                 // k <= 6
GroupPtr elementary_abelian_group(int p, int k);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// Cycle-notation parsing: header "degree d", then one generator per line.
// Points are 1-based; fixed points implicit. Errors carry line/column.
std::vector<Permutation> parse_permutations(const std::string& text);
std::string emit_permutations(int degree, const std::vector<Permutation>& perms);
Permutation parse_cycles(const std::string& text, int degree, int line_number = 1);

// Cayley-table format: first line n, then n rows of n 0-based indices.
GroupPtr read_cayley(const std::string& path);
GroupPtr parse_cayley(const std::string& text);
std::string emit_cayley(const FiniteGroup& g);
void write_cayley(const FiniteGroup& g, const std::string& path);

// Curated corpus of groups with distinguished subgroups. Not an exhaustive
// classification; representative examples the property suites run over.
struct CorpusSubgroup {
    std::string name;
    Subgroup subgroup;
};

struct CorpusEntry {
    std::string name;
    GroupPtr group;
    std::vector<CorpusSubgroup> subgroups;
};

std::vector<CorpusEntry> test_corpus(int max_order);

// The distinguished-subgroup family for one group: trivial, center,
// derived, every cyclic subgroup, the whole group, and one non-normal
// subgroup where the cyclic family contains one.
std::vector<CorpusSubgroup> distinguished_subgroups(const GroupPtr& g);

}  // namespace commprob
