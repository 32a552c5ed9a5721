#include "fixtures.hpp"

#include "phx/expressions.hpp"
#include "phx/text.hpp"

#include <algorithm>

namespace phx::testing {

namespace {

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

std::vector<BranchId> random_subset(Rng& rng, std::size_t cardinality) {
    std::vector<BranchId> out;
    while (out.empty()) {
        for (std::uint32_t r = 1; r <= cardinality; ++r) {
            if (chance(rng, 0.5)) out.push_back(BranchId{r});
        }
    }
    return out;
}

SimpleCollection random_root(Rng& rng, const GeneratingPolyhierarchy& gp, std::size_t earlier) {
    for (;;) {
        const auto& crit = gp.criteria()[pick(rng, earlier)];
        if (crit.branches.empty()) continue;
        const SimpleCollection seed({{crit.id, BranchId{static_cast<std::uint32_t>(pick(rng, crit.cardinality()) + 1)},
                                      false}});
        try {
            return complete(seed, gp);
        } catch (const std::exception&) {
        }
    }
}

} // namespace

GeneratingPolyhierarchy make_f1() {
    GeneratingPolyhierarchy gp;
    const auto c1 = gp.add_criterion("C1");
    gp.add_branch(c1, "1");
    gp.add_branch(c1, "2");
    const auto c2 = gp.add_criterion("C2");
    gp.add_branch(c2, "1");
    gp.add_branch(c2, "2");
    gp.add_branch(c2, "3");
    const auto c3 = gp.add_criterion("C3", SimpleCollection({{c1, BranchId{1}, false}}));
    gp.add_branch(c3, "1");
    gp.add_branch(c3, "2");
    return gp;
}

GeneratingPolyhierarchy random_family(Rng& rng, const FamilyOptions& o) {
    const int n = std::uniform_int_distribution<int>(o.min_criteria, o.max_criteria)(rng);
    GeneratingPolyhierarchy gp;
    bool dependent = false;
    for (int i = 0; i < n; ++i) {
        Expression root = Expression::universe();
        const bool force = i == n - 1 && !dependent && i > 0;
        if (i > 0 && (force || !chance(rng, o.global_probability))) {
            const SimpleCollection a = random_root(rng, gp, static_cast<std::size_t>(i));
            if (chance(rng, o.union_root_probability)) {
                const SimpleCollection b = random_root(rng, gp, static_cast<std::size_t>(i));
                root = canonicalize(Expression(Union({a, b})));
            } else {
                root = a;
            }
            dependent = true;
        }
        const auto c = gp.add_criterion("C" + std::to_string(i + 1), root);
        const int card = std::uniform_int_distribution<int>(o.min_cardinality, o.max_cardinality)(rng);
        for (int b = 1; b <= card; ++b) gp.add_branch(c, std::to_string(b));
    }
    return gp;
}

SimpleCollection random_simple(Rng& rng, const GeneratingPolyhierarchy& gp, double use_probability,
                               double complement_probability) {
    std::vector<Attribute> attrs;
    for (const auto& crit : gp.criteria()) {
        if (crit.branches.empty() || !chance(rng, use_probability)) continue;
        std::vector<Attribute> entry;
        if (chance(rng, complement_probability)) {
            for (BranchId b : random_subset(rng, crit.cardinality())) entry.push_back({crit.id, b, true});
        } else {
            entry.push_back({crit.id, BranchId{static_cast<std::uint32_t>(pick(rng, crit.cardinality()) + 1)}, false});
        }
        auto candidate = attrs;
        candidate.insert(candidate.end(), entry.begin(), entry.end());
        if (validate(SimpleCollection(candidate), gp).ok()) attrs = std::move(candidate);
    }
    return SimpleCollection(std::move(attrs));
}

Union random_union(Rng& rng, const GeneratingPolyhierarchy& gp, double complement_probability) {
    std::vector<SimpleCollection> comps;
    const std::size_t n = 1 + pick(rng, 3);
    for (std::size_t k = 0; k < n; ++k) comps.push_back(random_simple(rng, gp, 0.5, complement_probability));
    return Union(std::move(comps));
}

BranchUnionCollection random_branch_unions(Rng& rng, const GeneratingPolyhierarchy& gp, double use_probability) {
    std::vector<BranchUnion> unions;
    for (const auto& crit : gp.criteria()) {
        if (crit.branches.empty() || !chance(rng, use_probability)) continue;
        auto candidate = unions;
        candidate.push_back({crit.id, random_subset(rng, crit.cardinality())});
        if (validate(BranchUnionCollection(candidate), gp).ok()) unions = std::move(candidate);
    }
    return BranchUnionCollection(std::move(unions));
}

Expression expr(const GeneratingPolyhierarchy& gp, const std::string& text) { return parse(text, gp); }

} // namespace phx::testing
