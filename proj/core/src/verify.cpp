#include "immvar/verify.hpp"

#include "immvar/bposet.hpp"
#include "immvar/character.hpp"
#include "immvar/chimatroid.hpp"
#include "immvar/complexes.hpp"
#include "immvar/cyclotomic.hpp"
#include "immvar/errors.hpp"
#include "immvar/immanant.hpp"
#include "immvar/matrix.hpp"
#include "immvar/mvpoly.hpp"
#include "immvar/oracles.hpp"
#include "immvar/perm.hpp"
#include "immvar/permgroup.hpp"
#include "immvar/rng.hpp"
#include "immvar/strata.hpp"
#include "immvar/symtensor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <utility>

namespace immvar {

namespace {

GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

// Accumulates one CheckResult per named property; the detail keeps the first
// witness of failure only.
struct Checker {
    std::vector<CheckResult> out;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, pass ? "" : detail});
    }
};

Character faithful_cyclic_char(int k) {
    GroupPtr g = share(PermGroup::cyclic(k));
    std::vector<int> one_line;
    one_line.push_back(k);
    for (int i = 2; i <= k; ++i)
        one_line.push_back(i - 1);
    long e = (k == 1) ? 0 : 1;
    return Character::from_generator_exponents(
        g, static_cast<unsigned>(k), {{Perm::from_one_line(one_line), e}});
}

// The degree-2 character of S_3 as an explicit value table.
Character s3_standard_char() {
    GroupPtr g = share(PermGroup::symmetric(3));
    std::vector<CycloNum> vals;
    for (const Perm& w : g->elements()) {
        int c = w.cycle_count();
        vals.push_back(CycloNum(c == 3 ? 2 : (c == 2 ? 0 : -1)));
    }
    return Character::table(g, 1, std::move(vals));
}

Character klein_char() {
    GroupPtr g = share(PermGroup::closure(
        4, {Perm::parse("2143"), Perm::parse("3412")}));
    return Character::from_generator_exponents(
        g, 2, {{Perm::parse("2143"), 1}, {Perm::parse("3412"), 1}});
}

Character a3_nontrivial_char() {
    GroupPtr g = share(PermGroup::cyclic(3));
    return Character::from_generator_exponents(g, 3, {{Perm::parse("312"), 1}});
}

std::string pair_detail(const MultiIndex& a, const MultiIndex& b) {
    return a.to_string() + ", " + b.to_string();
}

// ---------------------------------------------------------------- permgrp --

std::vector<CheckResult> suite_permgrp(std::uint64_t) {
    Checker c;
    struct Sample {
        GroupPtr g;
        int n;
    };
    std::vector<Sample> samples = {
        {share(PermGroup::symmetric(3)), 3},
        {share(PermGroup::cyclic(4)), 2},
        {share(PermGroup::alternating(4)), 2},
        {share(PermGroup::young(4, {2, 2})), 2},
    };

    bool action = true, orbit = true, canon = true, rho = true;
    std::string action_w, orbit_w, canon_w, rho_w;
    for (const auto& s : samples) {
        const PermGroup& g = *s.g;
        MultiIndexRange range(s.n, g.k());
        range.for_each([&](const MultiIndex& x) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                const Perm& u = g.element(i);
                if (act(u, x).rho() != x.rho() && rho) {
                    rho = false;
                    rho_w = x.to_string();
                }
                if (g.canonical_rep(act(u, x)) != g.canonical_rep(x) && canon) {
                    canon = false;
                    canon_w = x.to_string();
                }
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const Perm& v = g.element(j);
                    if (act(u.compose(v), x) != act(u, act(v, x)) && action) {
                        action = false;
                        action_w = x.to_string();
                    }
                }
            }
            if (act(g.element(g.identity_index()), x) != x && action) {
                action = false;
                action_w = x.to_string();
            }
            std::uint64_t orbit_size = g.orbit_sorted(x).size();
            std::uint64_t stab_size = g.stabilizer_indices(x).size();
            if (orbit_size * stab_size != g.size() && orbit) {
                orbit = false;
                orbit_w = x.to_string();
            }
        });
    }
    c.add("left action laws", action, action_w);
    c.add("orbit-stabilizer product", orbit, orbit_w);
    c.add("canonical_rep constant on orbits", canon, canon_w);
    c.add("action preserves rho", rho, rho_w);
    return c.out;
}

// --------------------------------------------------------------- exactalg --

std::vector<CheckResult> suite_exactalg(std::uint64_t seed) {
    Checker c;
    SmallRng rng(seed);

    auto small_rat = [&]() {
        Rat num(static_cast<long>(rng.below(13)) - 6);
        Rat den(static_cast<long>(rng.below(4)) + 1);
        return num / den;
    };

    bool agree = true;
    for (int i = 0; i < 50 && agree; ++i) {
        Rat a = small_rat(), b = small_rat();
        agree = CycloNum(a) + CycloNum(b) == CycloNum(a + b) &&
                CycloNum(a) * CycloNum(b) == CycloNum(a * b) &&
                CycloNum(a) - CycloNum(b) == CycloNum(a - b);
    }
    c.add("conductor-1 arithmetic matches rationals", agree);

    bool sums = true;
    std::string sums_w;
    for (unsigned m = 2; m <= 12; ++m) {
        CycloNum total;
        for (unsigned e = 0; e < m; ++e)
            total += CycloNum::root_of_unity(m, e);
        if (!total.is_zero()) {
            sums = false;
            sums_w = "m=" + std::to_string(m);
            break;
        }
    }
    c.add("full root-of-unity sums vanish", sums, sums_w);

    bool inv = true;
    std::string inv_w;
    for (unsigned m : {3u, 4u, 5u, 6u, 8u, 12u}) {
        for (int trial = 0; trial < 10 && inv; ++trial) {
            std::vector<Rat> coeffs(euler_phi(m));
            for (auto& entry : coeffs)
                entry = Rat(static_cast<long>(rng.below(7)) - 3);
            CycloNum x = CycloNum::from_coeffs(m, coeffs);
            if (x.is_zero())
                continue;
            if (x * x.inverse() != CycloNum::one()) {
                inv = false;
                inv_w = "m=" + std::to_string(m);
            }
        }
        long e = static_cast<long>(rng.below(m));
        if (CycloNum::root_of_unity(m, e) * CycloNum::root_of_unity(m, -e) != CycloNum::one()) {
            inv = false;
            inv_w = "m=" + std::to_string(m);
        }
    }
    c.add("field inverses", inv, inv_w);

    VarsPtr vars = make_vars({"x", "y", "z"});
    auto random_poly = [&]() {
        MVPoly p = MVPoly::zero(vars);
        for (int t = 0; t < 4; ++t) {
            MVPoly::Exponents e = {static_cast<int>(rng.below(3)),
                                   static_cast<int>(rng.below(3)),
                                   static_cast<int>(rng.below(3))};
            p += MVPoly::monomial(vars, e, CycloNum(small_rat()));
        }
        return p;
    };
    bool hom = true;
    for (int trial = 0; trial < 20 && hom; ++trial) {
        MVPoly p = random_poly(), q = random_poly();
        std::vector<CycloNum> point = {
            CycloNum(small_rat()),
            CycloNum::root_of_unity(3, static_cast<long>(rng.below(3))),
            CycloNum(small_rat()) + CycloNum::root_of_unity(4, 1)};
        hom = (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point) &&
              (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point);
    }
    c.add("evaluation is a ring homomorphism", hom);
    return c.out;
}

// -------------------------------------------------------------- character --

std::vector<CheckResult> suite_character(std::uint64_t) {
    Checker c;
    std::vector<Character> one_dim = {
        Character::sign(share(PermGroup::symmetric(3))),
        Character::sign(share(PermGroup::symmetric(4))),
        faithful_cyclic_char(6),
        klein_char(),
        a3_nontrivial_char(),
    };
    std::vector<Character> all = one_dim;
    all.push_back(s3_standard_char());

    bool laws = true;
    std::string laws_w;
    for (const Character& chi : one_dim) {
        const PermGroup& g = chi.group();
        if (chi.value(g.identity_index()) != CycloNum::one())
            laws = false;
        for (std::size_t i = 0; i < g.size() && laws; ++i)
            if (chi.value(i) * chi.value(g.inverse_index(i)) != CycloNum::one()) {
                laws = false;
                laws_w = chi.describe();
            }
        PermGroup ker = chi.kernel_subgroup(); // construction verifies closure
        for (const Perm& w : ker.elements())
            if (chi.value_of(w) != CycloNum::one()) {
                laws = false;
                laws_w = chi.describe();
            }
    }
    c.add("one-dimensional character laws", laws, laws_w);

    bool idem = true;
    std::string idem_w;
    for (const Character& chi : all) {
        const PermGroup& g = chi.group();
        std::vector<CycloNum> coeff = chi.idempotent_coefficients();
        std::vector<CycloNum> conv(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                conv[g.compose_index(i, j)] += coeff[i] * coeff[j];
        if (conv != coeff) {
            idem = false;
            idem_w = chi.describe();
        }
    }
    c.add("idempotent squares to itself", idem, idem_w);

    bool vanish = true;
    std::string vanish_w;
    for (const Character& chi : one_dim) {
        const PermGroup& g = chi.group();
        int n = g.k() <= 4 ? 3 : 2;
        MultiIndexRange range(n, g.k());
        range.for_each([&](const MultiIndex& x) {
            CycloNum total;
            bool inside = true;
            for (std::size_t i : g.stabilizer_indices(x)) {
                total += chi.value(i);
                inside = inside && chi.value(i) == CycloNum::one();
            }
            if (total.is_zero() != !inside && vanish) {
                vanish = false;
                vanish_w = chi.describe() + " at " + x.to_string();
            }
        });
    }
    c.add("stabilizer sum vanishing criterion", vanish, vanish_w);
    return c.out;
}

// -------------------------------------------------------------- symtensor --

std::vector<CheckResult> suite_symtensor(std::uint64_t seed) {
    Checker c;
    SmallRng rng(seed);

    struct Sample {
        Character chi;
        int n;
    };
    std::vector<Sample> one_dim = {
        {Character::sign(share(PermGroup::symmetric(2))), 3},
        {Character::sign(share(PermGroup::symmetric(3))), 3},
        {faithful_cyclic_char(4), 2},
        {a3_nontrivial_char(), 3},
        {klein_char(), 2},
    };
    std::vector<Sample> all = one_dim;
    all.push_back({s3_standard_char(), 2});

    bool idem = true;
    std::string idem_w;
    for (const auto& s : all) {
        int k = s.chi.group().k();
        MultiIndexRange range(s.n, k);
        for (int trial = 0; trial < 10; ++trial) {
            SymTensor v(k, s.n);
            for (int t = 0; t < 4; ++t)
                v.add_term(range.at(rng.below(range.count())),
                           CycloNum(rng.small_nonzero()));
            SymTensor once = apply_idempotent(s.chi, v);
            if (apply_idempotent(s.chi, once) != once && idem) {
                idem = false;
                idem_w = s.chi.describe();
            }
        }
    }
    c.add("projection is idempotent", idem, idem_w);

    bool vanish = true;
    std::string vanish_w;
    for (const auto& s : all) {
        const PermGroup& g = s.chi.group();
        MultiIndexRange range(s.n, g.k());
        range.for_each([&](const MultiIndex& x) {
            bool zero = apply_idempotent(s.chi, SymTensor::basis(s.n, x)).is_zero();
            Character res = s.chi.restricted(g.stabilizer_indices(x));
            bool pairing_zero =
                res.inner_product(Character::trivial(res.group_ptr())).is_zero();
            if (zero != pairing_zero && vanish) {
                vanish = false;
                vanish_w = s.chi.describe() + " at " + x.to_string();
            }
        });
    }
    c.add("vanishing criterion matches restriction pairing", vanish, vanish_w);

    bool counts = true;
    std::string counts_w;
    for (const auto& s : one_dim) {
        Int rank = rank_of_image(s.chi, s.n);
        Int dim = dim_formula(s.chi, s.n);
        Int basis = Int(canonical_index_set(s.chi, s.n).size());
        if (rank != dim || dim != basis) {
            counts = false;
            counts_w = s.chi.describe();
        }
    }
    {
        Character std3 = s3_standard_char();
        if (rank_of_image(std3, 2) != dim_formula(std3, 2)) {
            counts = false;
            counts_w = std3.describe();
        }
    }
    c.add("rank = |basis| = dimension formula", counts, counts_w);

    bool equi = true;
    std::string equi_w;
    for (const auto& s : one_dim) {
        const PermGroup& g = s.chi.group();
        for (const MultiIndex& x : canonical_index_set(s.chi, s.n)) {
            SymTensor px = apply_idempotent(s.chi, SymTensor::basis(s.n, x));
            auto base = coords_in_basis(s.chi, px);
            for (std::size_t i = 0; i < g.size(); ++i) {
                SymTensor py =
                    apply_idempotent(s.chi, SymTensor::basis(s.n, act(g.element(i), x)));
                if (py != s.chi.value(i) * px && equi) {
                    equi = false;
                    equi_w = s.chi.describe() + " at " + x.to_string();
                }
                auto moved = coords_in_basis(s.chi, py);
                std::map<MultiIndex, CycloNum> scaled;
                for (const auto& [key, val] : base)
                    scaled[key] = s.chi.value(i) * val;
                if (moved != scaled && equi) {
                    equi = false;
                    equi_w = s.chi.describe() + " at " + x.to_string();
                }
            }
        }
    }
    c.add("coordinates transform by the character", equi, equi_w);
    return c.out;
}

// --------------------------------------------------------------- immanant --

std::vector<CheckResult> suite_immanant(std::uint64_t seed) {
    Checker c;
    SmallRng rng(seed);

    struct Sample {
        Character chi;
        int n;
    };
    std::vector<Sample> samples = {
        {Character::sign(share(PermGroup::symmetric(2))), 3},
        {Character::trivial(share(PermGroup::symmetric(2))), 3},
        {s3_standard_char(), 2},
        {a3_nontrivial_char(), 2},
        {faithful_cyclic_char(3), 2},
    };

    bool coherent = true;
    std::string coherent_w;
    for (const auto& s : samples) {
        int k = s.chi.group().k();
        auto eqs = parametric_equations(s.chi, s.n);
        CycloNum scale(Rat(Int(s.chi.group().size()), Int(s.chi.degree())));
        for (int trial = 0; trial < 5; ++trial) {
            Matrix<Rat> a0 = rng.rat_matrix(s.n, k);
            std::vector<std::vector<Rat>> cols(static_cast<std::size_t>(k));
            for (int j = 1; j <= k; ++j)
                for (int i = 1; i <= s.n; ++i)
                    cols[static_cast<std::size_t>(j - 1)].push_back(a0.at(i, j));
            SymTensor w = apply_idempotent(s.chi, SymTensor::decomposable(cols));
            std::vector<CycloNum> point;
            for (int i = 1; i <= s.n; ++i)
                for (int j = 1; j <= k; ++j)
                    point.push_back(CycloNum(a0.at(i, j)));
            for (const auto& [z, eq] : eqs)
                if (eq.evaluate(point) != scale * w.coeff(z) && coherent) {
                    coherent = false;
                    coherent_w = s.chi.describe() + " at " + z.to_string();
                }
        }
    }
    c.add("equations specialize to projected coefficients", coherent, coherent_w);

    bool recover = true;
    std::string recover_w;
    for (int n = 1; n <= 5; ++n) {
        GroupPtr sn = share(PermGroup::symmetric(n));
        Character sign = Character::sign(sn);
        Character triv = Character::trivial(sn);
        MultiIndex diag = MultiIndex::iota(n);
        for (int trial = 0; trial < 3; ++trial) {
            Matrix<Rat> m = rng.rat_matrix(n, n);
            if (immanant(sign, diag, diag, m) != CycloNum(determinant_cofactor(m))) {
                recover = false;
                recover_w = "determinant, n=" + std::to_string(n);
            }
            if (immanant(triv, diag, diag, m) != CycloNum(permanent_ryser(m))) {
                recover = false;
                recover_w = "permanent, n=" + std::to_string(n);
            }
        }
    }
    c.add("determinant and permanent recovery", recover, recover_w);

    bool equi = true;
    std::string equi_w;
    std::vector<Sample> one_dim = {
        {Character::sign(share(PermGroup::symmetric(3))), 3},
        {faithful_cyclic_char(4), 2},
        {klein_char(), 2},
    };
    for (const auto& s : one_dim) {
        const PermGroup& g = s.chi.group();
        int k = g.k();
        Matrix<Rat> m = rng.rat_matrix(s.n, s.n);
        MultiIndexRange range(s.n, k);
        for (int trial = 0; trial < 5; ++trial) {
            MultiIndex x = range.at(rng.below(range.count()));
            MultiIndex y = range.at(rng.below(range.count()));
            CycloNum base = immanant(s.chi, x, y, m);
            for (std::size_t i = 0; i < g.size(); ++i) {
                CycloNum moved = immanant(s.chi, act(g.element(i), x), y, m);
                if (moved != s.chi.value(g.inverse_index(i)) * base && equi) {
                    equi = false;
                    equi_w = s.chi.describe() + " at " + pair_detail(x, y);
                }
            }
        }
    }
    c.add("row-permutation equivariance", equi, equi_w);
    return c.out;
}

// ----------------------------------------------------------------- bposet --

std::vector<CheckResult> suite_bposet(std::uint64_t) {
    Checker c;

    struct Sample {
        GroupPtr g;
        int n;
    };
    std::vector<Sample> trivial_family = {
        {share(PermGroup::trivial(2)), 3},  {share(PermGroup::trivial(3)), 2},
        {share(PermGroup::symmetric(2)), 3}, {share(PermGroup::symmetric(3)), 3},
        {share(PermGroup::cyclic(3)), 3},    {share(PermGroup::young(3, {2, 1})), 3},
        {share(PermGroup::cyclic(4)), 2},    {share(PermGroup::young(4, {2, 2})), 2},
    };

    bool graded = true, polya = true, degree = true, burnside = true;
    std::string graded_w, polya_w, degree_w, burnside_w;
    for (const auto& s : trivial_family) {
        Character triv = Character::trivial(s.g);
        BPoset p = BPoset::build(triv, s.n); // construction verifies the axioms
        std::string tag =
            "|G|=" + std::to_string(s.g->size()) + ", k=" + std::to_string(s.g->k()) +
            ", n=" + std::to_string(s.n);
        if (!p.graded() || !p.rank_symmetric()) {
            graded = false;
            graded_w = tag;
            continue;
        }
        QPoly enumerated = p.rank_generating();
        if (enumerated != polya_rank_generating(*s.g, s.n)) {
            polya = false;
            polya_w = tag;
        }
        if (enumerated.degree() != s.g->k() * (s.n - 1)) {
            degree = false;
            degree_w = tag;
        }
        Rat orbit_count(0);
        for (const Perm& w : s.g->elements())
            orbit_count += Rat(int_pow(Int(s.n), static_cast<unsigned>(w.cycle_count())));
        orbit_count /= Rat(Int(s.g->size()));
        if (!is_integer(orbit_count) || to_integer(orbit_count) != Int(p.size()) ||
            Int(p.size()) != dim_formula(triv, s.n)) {
            burnside = false;
            burnside_w = tag;
        }
    }
    c.add("trivial-character posets graded and rank-symmetric", graded, graded_w);
    c.add("cycle-index polynomial matches enumeration", polya, polya_w);
    c.add("rank polynomial degree k(n-1)", degree, degree_w);
    c.add("orbit count = |B| = dimension formula", burnside, burnside_w);

    bool witt = true;
    std::string witt_w;
    for (int k = 1; k <= 8 && witt; ++k) {
        Character chi = faithful_cyclic_char(k);
        for (int n = 1; n <= 3 && witt; ++n)
            if (witt_count(k, n) != Int(canonical_index_set(chi, n).size())) {
                witt = false;
                witt_w = "k=" + std::to_string(k) + ", n=" + std::to_string(n);
            }
    }
    c.add("necklace count matches canonical index set", witt, witt_w);

    bool proj = true;
    std::string proj_w;
    std::vector<Sample> proj_samples = {
        {share(PermGroup::symmetric(2)), 3},
        {share(PermGroup::symmetric(3)), 3},
        {share(PermGroup::cyclic(3)), 2},
        {share(PermGroup::young(4, {2, 2})), 2},
    };
    for (const auto& s : proj_samples)
        if (!projection_check(s.g, s.n)) {
            proj = false;
            proj_w = "k=" + std::to_string(s.g->k()) + ", n=" + std::to_string(s.n);
        }
    c.add("canonicalization is order and rank preserving", proj, proj_w);

    bool mob = true;
    std::string mob_w;
    std::vector<BPoset> posets;
    posets.push_back(BPoset::build(Character::trivial(share(PermGroup::symmetric(2))), 3));
    posets.push_back(BPoset::build(Character::trivial(share(PermGroup::cyclic(3))), 3));
    posets.push_back(BPoset::build(faithful_cyclic_char(6), 2));
    for (const BPoset& p : posets) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.mobius(i, i) != 1) {
                mob = false;
                mob_w = p.element(i).to_string();
            }
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (!p.leq(i, j) || i == j)
                    continue;
                Int total(0);
                for (std::size_t z : p.interval(i, j))
                    total += p.mobius(i, z);
                if (total != 0) {
                    mob = false;
                    mob_w = pair_detail(p.element(i), p.element(j));
                }
            }
        }
    }
    c.add("Mobius recursion sums to zero", mob, mob_w);
    return c.out;
}

// ------------------------------------------------------------- chimatroid --

std::vector<CheckResult> suite_chimatroid(std::uint64_t seed) {
    Checker c;
    SmallRng rng(seed);

    std::vector<PosetPtr> bases;
    bases.push_back(std::make_shared<const BPoset>(
        BPoset::build(Character::sign(share(PermGroup::symmetric(3))), 4)));
    bases.push_back(std::make_shared<const BPoset>(
        BPoset::build(Character::trivial(share(PermGroup::symmetric(2))), 3)));

    bool commute = true, sized = true;
    std::string commute_w, sized_w;
    for (const PosetPtr& base : bases) {
        std::vector<Perm> relabelings;
        {
            std::vector<int> one_line;
            for (int i = 1; i <= base->n(); ++i)
                one_line.push_back(i);
            do
                relabelings.push_back(Perm::from_one_line(one_line));
            while (std::next_permutation(one_line.begin(), one_line.end()));
        }
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<MultiIndex> members;
            for (std::size_t i = 0; i < base->size(); ++i)
                if (rng.below(2) == 0)
                    members.push_back(base->element(i));
            if (members.empty())
                members.push_back(base->element(rng.below(base->size())));
            SubsetB x = SubsetB::from_members(base, members);
            for (const Perm& sigma : relabelings) {
                bool trivial_char = base->character().describe().find("trivial") !=
                                    std::string::npos;
                if (trivial_char && relabel(sigma, x).members.size() != x.members.size()) {
                    sized = false;
                    sized_w = sigma.to_string();
                }
                for (const Perm& tau : relabelings)
                    if (relabel(sigma, relabel(tau, x)).members !=
                        relabel(sigma.compose(tau), x).members) {
                        commute = false;
                        commute_w = sigma.to_string() + " after " + tau.to_string();
                    }
            }
        }
    }
    c.add("relabeling composes functorially", commute, commute_w);
    c.add("relabeling preserves size for trivial characters", sized, sized_w);

    struct Sample {
        GroupPtr g;
        int n;
    };
    std::vector<Sample> trivial_samples = {
        {share(PermGroup::symmetric(2)), 3},
        {share(PermGroup::symmetric(3)), 3},
        {share(PermGroup::cyclic(3)), 2},
        {share(PermGroup::cyclic(4)), 2},
    };
    bool universal = true;
    std::string universal_w;
    for (const auto& s : trivial_samples) {
        Character triv = Character::trivial(s.g);
        PosetPtr p = std::make_shared<const BPoset>(BPoset::build(triv, s.n));
        int k = s.g->k();
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<Rat>> factors(static_cast<std::size_t>(k));
            for (auto& f : factors) {
                f.resize(static_cast<std::size_t>(s.n), Rat(0));
                for (auto& entry : f)
                    if (rng.below(3) != 0)
                        entry = rng.small_nonzero();
                f[rng.below(f.size())] = rng.small_nonzero();
            }
            MatroidVerdict verdict = support_is_matroid(triv, factors);
            std::vector<int> argmax;
            for (const auto& f : factors) {
                int top = 0;
                for (int i = 1; i <= s.n; ++i)
                    if (f[static_cast<std::size_t>(i - 1)] != 0)
                        top = i;
                argmax.push_back(top);
            }
            MultiIndex expected = s.g->canonical_rep(MultiIndex(argmax));
            SymTensor w = apply_idempotent(triv, SymTensor::decomposable(factors));
            MaximaReport maxima = has_unique_max(SubsetB::from_members(p, support(triv, w)));
            if (!verdict.is_chi_matroid || !maxima.unique ||
                maxima.maxima != std::vector<MultiIndex>{expected}) {
                universal = false;
                universal_w = "k=" + std::to_string(k) + ", n=" + std::to_string(s.n) +
                              ", trial " + std::to_string(trial);
            }
        }
    }
    c.add("projected supports are matroids with the predicted maximum", universal,
          universal_w);

    bool gale = true;
    std::string gale_w;
    struct GaleCase {
        int k, n;
    };
    std::vector<GaleCase> cases = {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
    for (const auto& gc : cases) {
        Character sign = Character::sign(share(PermGroup::symmetric(gc.k)));
        PosetPtr p = std::make_shared<const BPoset>(BPoset::build(sign, gc.n));
        std::size_t count = p->size();
        for (std::uint64_t mask = 1; mask < (1ull << count); ++mask) {
            std::vector<MultiIndex> members;
            std::vector<std::vector<int>> sets;
            for (std::size_t i = 0; i < count; ++i)
                if (mask & (1ull << i)) {
                    members.push_back(p->element(i));
                    sets.push_back(p->element(i).v);
                }
            if (members.size() > 6)
                continue;
            bool ours = is_chi_matroid(SubsetB::from_members(p, members)).is_chi_matroid;
            if (ours != matroid_basis_exchange(sets)) {
                gale = false;
                gale_w = "k=" + std::to_string(gc.k) + ", n=" + std::to_string(gc.n) +
                         ", X=" + members.front().to_string() + "...";
            }
        }
    }
    c.add("sign-character verdict matches basis exchange", gale, gale_w);
    return c.out;
}

// ----------------------------------------------------------------- strata --

std::vector<CheckResult> suite_strata(std::uint64_t seed) {
    Checker c;
    SmallRng rng(seed);

    struct Sample {
        GroupPtr g;
        int n;
    };
    std::vector<Sample> samples = {
        {share(PermGroup::symmetric(2)), 3},
        {share(PermGroup::symmetric(3)), 2},
        {share(PermGroup::cyclic(3)), 2},
        {share(PermGroup::young(3, {2, 1})), 2},
    };

    bool coherent = true, projected = true, maximal = true, monotone = true;
    std::string coherent_w, projected_w, maximal_w, monotone_w;
    for (const auto& s : samples) {
        Character triv = Character::trivial(s.g);
        PosetPtr p = std::make_shared<const BPoset>(BPoset::build(triv, s.n));
        int k = s.g->k();

        for (std::size_t xi = 0; xi < p->size(); ++xi) {
            const MultiIndex& x = p->element(xi);
            auto eqs = stratum_equations(*p, x);
            for (int trial = 0; trial < 3; ++trial) {
                Matrix<Rat> a0 = rng.rat_matrix(s.n, k);
                Matrix<Rat> cut = truncate(a0, x);
                std::vector<std::vector<Rat>> cols(static_cast<std::size_t>(k));
                for (int j = 1; j <= k; ++j)
                    for (int i = 1; i <= s.n; ++i)
                        cols[static_cast<std::size_t>(j - 1)].push_back(cut.at(i, j));
                SymTensor w = apply_idempotent(triv, SymTensor::decomposable(cols));
                auto coords = coords_in_basis(triv, w);
                for (const MultiIndex& z : support(triv, w))
                    if (!p->leq(p->index_of(z), xi) && coherent) {
                        coherent = false;
                        coherent_w = pair_detail(z, x);
                    }
                std::vector<CycloNum> point;
                for (int i = 1; i <= s.n; ++i)
                    for (int j = 1; j <= k; ++j)
                        point.push_back(CycloNum(a0.at(i, j)));
                for (const auto& [y, eq] : eqs) {
                    auto it = coords.find(y);
                    CycloNum expected = it == coords.end() ? CycloNum() : it->second;
                    if (eq.evaluate(point) != expected && coherent) {
                        coherent = false;
                        coherent_w = pair_detail(y, x);
                    }
                }
            }

            std::set<MultiIndex> image;
            MultiIndexRange range(s.n, k);
            range.for_each([&](const MultiIndex& z) {
                if (z.leq_componentwise(x))
                    image.insert(s.g->canonical_rep(z));
            });
            std::set<MultiIndex> ideal;
            for (std::size_t i : p->principal_ideal(xi))
                ideal.insert(p->element(i));
            if (image != ideal && projected) {
                projected = false;
                projected_w = x.to_string();
            }
        }

        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::vector<Rat>> factors(static_cast<std::size_t>(k));
            for (auto& f : factors) {
                f.resize(static_cast<std::size_t>(s.n), Rat(0));
                for (auto& entry : f)
                    if (rng.below(3) != 0)
                        entry = rng.small_nonzero();
                f[rng.below(f.size())] = rng.small_nonzero();
            }
            SymTensor w = apply_idempotent(triv, SymTensor::decomposable(factors));
            std::vector<MultiIndex> supp = support(triv, w);
            MaximaReport report = has_unique_max(SubsetB::from_members(p, supp));
            if (!report.unique) {
                maximal = false;
                maximal_w = "trial " + std::to_string(trial);
                continue;
            }
            std::size_t top = p->index_of(report.maxima.front());
            for (const MultiIndex& z : supp)
                if (!p->leq(p->index_of(z), top)) {
                    maximal = false;
                    maximal_w = pair_detail(z, report.maxima.front());
                }
        }

        for (std::size_t xi = 0; xi < p->size() && monotone; ++xi)
            for (std::size_t yi = 0; yi < p->size() && monotone; ++yi) {
                if (xi == yi || !p->leq(xi, yi))
                    continue;
                const MultiIndex& x = p->element(xi);
                const MultiIndex& y = p->element(yi);
                const Perm* g = nullptr;
                for (const Perm& cand : s.g->elements())
                    if (x.leq_componentwise(act(cand, y))) {
                        g = &cand;
                        break;
                    }
                if (g == nullptr) {
                    monotone = false;
                    monotone_w = pair_detail(x, y);
                    break;
                }
                std::vector<std::size_t> new_index(static_cast<std::size_t>(s.n * k));
                std::vector<bool> zeroed(static_cast<std::size_t>(s.n * k), false);
                for (int r = 1; r <= s.n; ++r)
                    for (int j = 1; j <= k; ++j) {
                        std::size_t old_pos = static_cast<std::size_t>((r - 1) * k + j - 1);
                        new_index[old_pos] =
                            static_cast<std::size_t>((r - 1) * k + g->apply(j) - 1);
                        zeroed[old_pos] = r > x[j - 1];
                    }
                auto eqs_x = stratum_equations(*p, x);
                auto eqs_y = stratum_equations(*p, y);
                for (const auto& [t, ex] : eqs_x)
                    if (ex != eqs_y.at(t).renamed(new_index).with_zeroed(zeroed)) {
                        monotone = false;
                        monotone_w = pair_detail(x, y) + " at " + t.to_string();
                    }
            }
    }
    c.add("stratum equations specialize to basis coordinates", coherent, coherent_w);
    c.add("componentwise ideals project onto poset ideals", projected, projected_w);
    c.add("sampled supports sit below a unique maximum", maximal, maximal_w);
    c.add("lower strata are truncations of higher ones", monotone, monotone_w);
    return c.out;
}

// -------------------------------------------------------------- complexes --

std::vector<CheckResult> suite_complexes(std::uint64_t seed) {
    Checker c;
    SmallRng rng(seed);

    std::vector<BPoset> posets;
    posets.push_back(BPoset::build(Character::trivial(share(PermGroup::symmetric(2))), 3));
    posets.push_back(BPoset::build(Character::trivial(share(PermGroup::cyclic(3))), 3));
    posets.push_back(BPoset::build(Character::trivial(share(PermGroup::symmetric(3))), 3));
    posets.push_back(BPoset::build(faithful_cyclic_char(6), 2));

    bool hall = true;
    std::string hall_w;
    for (const BPoset& p : posets)
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (i == j || !p.leq(i, j))
                    continue;
                SimplicialComplex open = order_complex(p, p.open_interval(i, j));
                if (open.reduced_euler() != p.mobius(i, j) && hall) {
                    hall = false;
                    hall_w = pair_detail(p.element(i), p.element(j));
                }
            }
    c.add("reduced Euler characteristic equals Mobius", hall, hall_w);

    bool shell = true;
    std::string shell_w;
    for (int k = 2; k <= 3; ++k)
        for (int n = 2; n <= 3; ++n) {
            BPoset p = BPoset::build(Character::trivial(share(PermGroup::symmetric(k))), n);
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; j < p.size(); ++j) {
                    if (i == j || !p.leq(i, j))
                        continue;
                    SimplicialComplex open = order_complex(p, p.open_interval(i, j));
                    if (shellable(open).verdict != ShellVerdict::Yes && shell) {
                        shell = false;
                        shell_w = pair_detail(p.element(i), p.element(j));
                    }
                }
        }
    c.add("intervals of the multiset lattice are shellable", shell, shell_w);

    bool stable = true;
    std::string stable_w;
    {
        SimplicialComplex reference = order_complex(posets[2]);
        std::vector<std::vector<int>> facets = reference.facets();
        ShellResult base = shellable(reference);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::vector<int>> shuffled = facets;
            for (std::size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
            if (trial == 0)
                std::reverse(shuffled.begin(), shuffled.end());
            SimplicialComplex rebuilt = SimplicialComplex::from_facets(shuffled);
            if (rebuilt.facets() != reference.facets() ||
                rebuilt.f_vector() != reference.f_vector() ||
                shellable(rebuilt).verdict != base.verdict) {
                stable = false;
                stable_w = "trial " + std::to_string(trial);
            }
        }
    }
    c.add("verdict is input-order insensitive", stable, stable_w);
    return c.out;
}

} // namespace

bool SuiteReport::pass() const {
    for (const CheckResult& r : checks)
        if (!r.pass)
            return false;
    return true;
}

std::vector<std::string> suite_names() {
    return {"permgrp",  "exactalg",   "character", "symtensor", "immanant",
            "bposet",   "chimatroid", "strata",    "complexes"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    SuiteReport report;
    report.suite = name;
    if (name == "permgrp")
        report.checks = suite_permgrp(seed);
    else if (name == "exactalg")
        report.checks = suite_exactalg(seed);
    else if (name == "character")
        report.checks = suite_character(seed);
    else if (name == "symtensor")
        report.checks = suite_symtensor(seed);
    else if (name == "immanant")
        report.checks = suite_immanant(seed);
    else if (name == "bposet")
        report.checks = suite_bposet(seed);
    else if (name == "chimatroid")
        report.checks = suite_chimatroid(seed);
    else if (name == "strata")
        report.checks = suite_strata(seed);
    else if (name == "complexes")
        report.checks = suite_complexes(seed);
    else
        throw InvalidArgumentError("unknown suite \"" + name + "\"");
    return report;
}

std::vector<SuiteReport> run_all_suites(std::uint64_t seed) {
    std::vector<SuiteReport> reports;
    for (const std::string& name : suite_names())
        reports.push_back(run_suite(name, seed));
    return reports;
}

} // namespace immvar
