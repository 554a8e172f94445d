#include "commprob/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace commprob {

namespace {

// Renumbers an abstract table breadth-first from the identity over the
// given generators, so certificates are stable across platforms.
GroupPtr canonicalize(int n, const std::vector<Elt>& mult, const std::vector<Elt>& gens) {
    std::vector<Elt> new_of_old(n, -1);
    std::vector<Elt> old_of_new;
    old_of_new.reserve(n);
    new_of_old[0] = 0;
    old_of_new.push_back(0);
    for (size_t head = 0; head < old_of_new.size(); ++head) {
        for (Elt s : gens) {
            const Elt y = mult[static_cast<size_t>(old_of_new[head]) * n + s];
            if (new_of_old[y] == -1) {
                new_of_old[y] = static_cast<Elt>(old_of_new.size());
                old_of_new.push_back(y);
            }
        }
    }
    if (static_cast<int>(old_of_new.size()) != n)
        throw Error("internal: builder generators do not generate the group");
    std::vector<Elt> table(static_cast<size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] =
                new_of_old[mult[static_cast<size_t>(old_of_new[a]) * n + old_of_new[b]]];
    std::vector<Elt> new_gens;
    for (Elt s : gens) {
        const Elt g = new_of_old[s];
        if (std::find(new_gens.begin(), new_gens.end(), g) == new_gens.end()) new_gens.push_back(g);
    }
    return FiniteGroup::from_tables_unchecked(std::move(table), std::move(new_gens));
}

void check_cap(long long order, int cap = kDefaultOrderCap) {
    if (order > cap)
        throw SizeLimitError("group order " + std::to_string(order) + " exceeds the cap of " +
                             std::to_string(cap));
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

GroupPtr cyclic_group(int n) {
    if (n < 1) throw PreconditionError("cyclic group order must be positive");
    check_cap(n);
    std::vector<Elt> mult(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mult[static_cast<size_t>(i) * n + j] = (i + j) % n;
    std::vector<Elt> gens;
    if (n > 1) gens.push_back(1);
    return canonicalize(n, mult, gens);
}

GroupPtr dihedral_group(int order) {
    if (order < 2 || order % 2 != 0) throw PreconditionError("dihedral order must be even and >= 2");
    check_cap(order);
    const int n = order / 2;
    // element i + n*j encodes r^i s^j with s r s = r^{-1}
    auto idx = [n](int i, int j) { return i + n * j; };
    std::vector<Elt> mult(static_cast<size_t>(order) * order);
    for (int i1 = 0; i1 < n; ++i1) {
        for (int j1 = 0; j1 < 2; ++j1) {
            for (int i2 = 0; i2 < n; ++i2) {
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i, j;
                    if (j1 == 0) {
                        i = (i1 + i2) % n;
                        j = j2;
                    } else {
                        i = ((i1 - i2) % n + n) % n;
                        j = 1 ^ j2;
                    }
                    mult[static_cast<size_t>(idx(i1, j1)) * order + idx(i2, j2)] = idx(i, j);
                }
            }
        }
    }
    std::vector<Elt> gens;
    if (n > 1) gens.push_back(idx(1, 0));
    gens.push_back(idx(0, 1));
    return canonicalize(order, mult, gens);
}

GroupPtr generalized_quaternion_group(int order) {
    if (order < 4 || order % 4 != 0)
        throw PreconditionError("generalized quaternion order must be a positive multiple of 4");
    check_cap(order);
    const int n2 = order / 2;  // a has order 2n, b^2 = a^n, b^-1 a b = a^-1
    const int n = order / 4;
    auto idx = [n2](int i, int j) { return i + n2 * j; };
    std::vector<Elt> mult(static_cast<size_t>(order) * order);
    for (int i1 = 0; i1 < n2; ++i1) {
        for (int j1 = 0; j1 < 2; ++j1) {
            for (int i2 = 0; i2 < n2; ++i2) {
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i, j;
                    if (j1 == 0) {
                        i = (i1 + i2) % n2;
                        j = j2;
                    } else if (j2 == 0) {
                        i = ((i1 - i2) % n2 + n2) % n2;
                        j = 1;
                    } else {
                        i = ((i1 - i2 + n) % n2 + n2) % n2;
                        j = 0;
                    }
                    mult[static_cast<size_t>(idx(i1, j1)) * order + idx(i2, j2)] = idx(i, j);
                }
            }
        }
    }
    std::vector<Elt> gens{idx(1, 0), idx(0, 1)};
    return canonicalize(order, mult, gens);
}

GroupPtr symmetric_group(int k) {
    if (k < 1 || k > 6) throw PreconditionError("symmetric group supported for 1 <= k <= 6");
    if (k == 1) return close_generators({perm_identity(1)});
    Permutation swap01 = perm_identity(k);
    std::swap(swap01[0], swap01[1]);
    Permutation cycle(k);
    for (int i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
    if (k == 2) return close_generators({swap01});
    return close_generators({swap01, cycle});
}

GroupPtr alternating_group(int k) {
    if (k < 1 || k > 6) throw PreconditionError("alternating group supported for 1 <= k <= 6");
    if (k < 3) return close_generators({perm_identity(std::max(k, 1))});
    Permutation three = perm_identity(k);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    if (k == 3) return close_generators({three});
    Permutation cyc = perm_identity(k);
    if (k % 2 == 1) {
        for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;  // k-cycle, even for odd k
    } else {
        for (int i = 1; i < k; ++i) cyc[i] = 1 + (i % (k - 1));  // (k-1)-cycle on 2..k
    }
    return close_generators({three, cyc});
}

GroupPtr elementary_abelian_group(int p, int k) {
    if (!is_prime(p)) throw PreconditionError("elementary abelian base must be prime");
    if (k < 1) throw PreconditionError("elementary abelian rank must be positive");
    long long order = 1;
    for (int i = 0; i < k; ++i) {
        order *= p;
        check_cap(order);
    }
    const int n = static_cast<int>(order);
    std::vector<Elt> mult(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int x = a, y = b, pw = 1, sum = 0;
            for (int d = 0; d < k; ++d) {
                sum += ((x % p + y % p) % p) * pw;
                x /= p;
                y /= p;
                pw *= p;
            }
            mult[static_cast<size_t>(a) * n + b] = sum;
        }
    }
    std::vector<Elt> gens;
    for (int d = 0, pw = 1; d < k; ++d, pw *= p) gens.push_back(pw);
    return canonicalize(n, mult, gens);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    const long long order = static_cast<long long>(a->order()) * b->order();
    check_cap(order);
    const int na = a->order(), nb = b->order(), n = static_cast<int>(order);
    auto idx = [nb](int x, int y) { return x * nb + y; };
    std::vector<Elt> mult(static_cast<size_t>(n) * n);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    mult[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a->mul(x1, x2), b->mul(y1, y2));
    std::vector<Elt> gens;
    for (Elt s : a->generators()) gens.push_back(idx(s, 0));
    for (Elt s : b->generators()) gens.push_back(idx(0, s));
    if (gens.empty() && n > 1) throw Error("internal: product factors carry no generators");
    return canonicalize(n, mult, gens);
}

// --- spec parsing --------------------------------------------------------

GroupSpec parse_group_spec(const std::string& text) {
    GroupSpec spec;
    spec.text = text;
    if (text.rfind("perm:", 0) == 0)
        spec.kind = GroupSpec::Kind::PermFile;
    else if (text.rfind("table:", 0) == 0)
        spec.kind = GroupSpec::Kind::TableFile;
    else
        spec.kind = GroupSpec::Kind::Named;
    return spec;
}

namespace {

GroupPtr build_named_token(const std::string& token, int cap) {
    std::string t;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(c));
    if (t.empty()) throw PreconditionError("empty group name");

    auto num_after = [&](size_t pos) {
        if (pos >= t.size()) throw PreconditionError("missing parameter in group name '" + token + "'");
        for (size_t i = pos; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw PreconditionError("unknown group name '" + token + "'");
        return std::stoi(t.substr(pos));
    };

    if (t.rfind("cyclic:", 0) == 0) return cyclic_group(num_after(7));
    if (t.rfind("dihedral:", 0) == 0) return dihedral_group(num_after(9));
    if (t.rfind("quaternion:", 0) == 0) return generalized_quaternion_group(num_after(11));
    if (t.rfind("symmetric:", 0) == 0) return symmetric_group(num_after(10));
    if (t.rfind("alternating:", 0) == 0) return alternating_group(num_after(12));
    if (t.rfind("elem:", 0) == 0) {
        const auto comma = t.find(',', 5);
        if (comma == std::string::npos) throw PreconditionError("elem:<p>,<k> expected in '" + token + "'");
        return elementary_abelian_group(std::stoi(t.substr(5, comma - 5)), num_after(comma + 1));
    }
    if (t[0] == 'e') {
        const auto caret = t.find('^');
        if (caret != std::string::npos)
            return elementary_abelian_group(std::stoi(t.substr(1, caret - 1)), num_after(caret + 1));
    }
    switch (t[0]) {
        case 'c': return cyclic_group(num_after(1));
        case 'd': return dihedral_group(2 * num_after(1));  // Dn acts on n points
        case 'q': return generalized_quaternion_group(num_after(1));
        case 's': return symmetric_group(num_after(1));
        case 'a': return alternating_group(num_after(1));
        default: break;
    }
    (void)cap;
    throw PreconditionError("unknown group name '" + token + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

GroupPtr build_group(const GroupSpec& spec, int cap) {
    switch (spec.kind) {
        case GroupSpec::Kind::PermFile: {
            const std::string path = spec.text.substr(5);
            const auto perms = parse_permutations(read_file(path));
            return close_generators(perms, cap);
        }
        case GroupSpec::Kind::TableFile:
            return read_cayley(spec.text.substr(6));
        case GroupSpec::Kind::Named: {
            // 'x' separates direct-product factors of named groups.
            std::vector<std::string> parts;
            std::string cur;
            for (char c : spec.text) {
                if (c == 'x' || c == 'X') {
                    parts.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            parts.push_back(cur);
            GroupPtr g = build_named_token(parts[0], cap);
            for (size_t i = 1; i < parts.size(); ++i)
                g = direct_product(g, build_named_token(parts[i], cap));
            return g;
        }
    }
    throw PreconditionError("unrecognized group spec");
}

GroupPtr build_group(const std::string& text, int cap) {
    return build_group(parse_group_spec(text), cap);
}

// --- permutation files ---------------------------------------------------

Permutation parse_cycles(const std::string& text, int degree, int line_number) {
    Permutation perm = perm_identity(degree);
    std::vector<bool> used(degree, false);
    size_t i = 0;
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError(what + " at line " + std::to_string(line_number) + ", column " +
                          std::to_string(i + 1));
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw fail("expected '('");
        ++i;
        std::vector<int> cycle;
        while (true) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= text.size()) throw fail("unbalanced parentheses");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected a point number");
            int point = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                point = point * 10 + (text[i] - '0');
                ++i;
            }
            if (point < 1 || point > degree)
                throw fail("point " + std::to_string(point) + " outside degree " + std::to_string(degree));
            if (used[point - 1]) throw fail("repeated point " + std::to_string(point));
            used[point - 1] = true;
            cycle.push_back(point - 1);
        }
        for (size_t j = 0; j < cycle.size(); ++j) perm[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    return perm;
}

std::vector<Permutation> parse_permutations(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    int degree = -1;
    std::vector<Permutation> perms;
    while (std::getline(in, line)) {
        ++line_number;
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
        size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start]))) ++start;
        trimmed = trimmed.substr(start);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (degree == -1) {
            std::istringstream header(trimmed);
            std::string word;
            header >> word;
            if (word != "degree" || !(header >> degree) || degree < 0)
                throw ParseError("expected header 'degree d' at line " + std::to_string(line_number));
            continue;
        }
        perms.push_back(parse_cycles(trimmed, degree, line_number));
    }
    if (degree == -1) throw ParseError("missing 'degree d' header");
    return perms;
}

std::string emit_permutations(int degree, const std::vector<Permutation>& perms) {
    std::ostringstream out;
    out << "degree " << degree << "\n";
    for (const auto& p : perms) out << perm_to_cycles(p) << "\n";
    return out.str();
}

// --- Cayley-table files --------------------------------------------------

GroupPtr parse_cayley(const std::string& text) {
    std::istringstream in(text);
    long long n = 0;
    if (!(in >> n) || n < 1) throw ParseError("expected the group order on the first line");
    if (n > kDefaultOrderCap)
        throw SizeLimitError("table order exceeds the cap of " + std::to_string(kDefaultOrderCap));
    std::vector<std::vector<Elt>> rows(static_cast<size_t>(n), std::vector<Elt>(static_cast<size_t>(n)));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (!(in >> rows[i][j]))
                throw ParseError("table truncated at row " + std::to_string(i) + ", column " +
                                 std::to_string(j));
    long long extra;
    if (in >> extra) throw ParseError("trailing data after the table");
    return validate_table(rows);
}

GroupPtr read_cayley(const std::string& path) {
    return parse_cayley(read_file(path));
}

std::string emit_cayley(const FiniteGroup& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (Elt a = 0; a < g.order(); ++a) {
        for (Elt b = 0; b < g.order(); ++b) {
            if (b) out << ' ';
            out << g.mul(a, b);
        }
        out << "\n";
    }
    return out.str();
}

void write_cayley(const FiniteGroup& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << emit_cayley(g);
    if (!out) throw IoError("write failed for '" + path + "'");
}

// --- corpus --------------------------------------------------------------

std::vector<CorpusSubgroup> distinguished_subgroups(const GroupPtr& g) {
    std::vector<CorpusSubgroup> out;
    std::set<std::vector<bool>> seen;
    auto add = [&](const std::string& name, Subgroup s) {
        if (seen.insert(s.bits()).second) out.push_back({name, std::move(s)});
    };
    add("trivial", Subgroup::trivial(g));
    for (Elt x = 1; x < g->order(); ++x) add("cyclic:" + std::to_string(x), subgroup_generated(g, {x}));
    add("center", center_subgroup(g));
    add("derived", derived_subgroup(g));
    add("full", Subgroup::whole(g));
    return out;
}

std::vector<CorpusEntry> test_corpus(int max_order) {
    if (max_order > kDefaultOrderCap)
        throw PreconditionError("corpus max order exceeds the table cap");
    std::vector<std::pair<std::string, GroupPtr (*)()>> builders;

    static const int cyclic_orders[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 24, 36, 48, 64, 72};
    static const int dihedral_orders[] = {4, 6, 8, 10, 12, 16, 20, 24, 32, 48};
    static const int quaternion_orders[] = {8, 12, 16, 24, 32, 48};

    std::vector<CorpusEntry> corpus;
    auto add = [&](const std::string& name, GroupPtr g) {
        if (g->order() > max_order) return;
        corpus.push_back({name, g, distinguished_subgroups(g)});
    };

    for (int n : cyclic_orders)
        if (n <= max_order) add("C" + std::to_string(n), cyclic_group(n));
    for (int n : dihedral_orders)
        if (n <= max_order) add("dihedral:" + std::to_string(n), dihedral_group(n));
    for (int n : quaternion_orders)
        if (n <= max_order) add("quaternion:" + std::to_string(n), generalized_quaternion_group(n));
    for (int k = 3; k <= 6; ++k) {
        long long order = 1;
        for (int i = 2; i <= k; ++i) order *= i;
        if (order <= max_order) add("S" + std::to_string(k), symmetric_group(k));
        if (order / 2 <= max_order && k >= 4) add("A" + std::to_string(k), alternating_group(k));
    }
    static const std::pair<int, int> elementary[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}};
    for (auto [p, k] : elementary) {
        long long order = 1;
        for (int i = 0; i < k; ++i) order *= p;
        if (order <= max_order)
            add("E" + std::to_string(p) + "^" + std::to_string(k), elementary_abelian_group(p, k));
    }
    if (max_order >= 8) add("C2xC4", direct_product(cyclic_group(2), cyclic_group(4)));
    if (max_order >= 12) add("S3xC2", direct_product(symmetric_group(3), cyclic_group(2)));
    if (max_order >= 16) add("Q8xC2", direct_product(generalized_quaternion_group(8), cyclic_group(2)));
    if (max_order >= 24) add("A4xC2", direct_product(alternating_group(4), cyclic_group(2)));
    if (max_order >= 36) add("S3xS3", direct_product(symmetric_group(3), symmetric_group(3)));
    return corpus;
}

}  // namespace commprob
