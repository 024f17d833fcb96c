#include "fermi/omega.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fermi/invariants.hpp"
#include "fermi/slocc.hpp"

namespace fermi::omega {

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ e0 = Occ::Empty;
constexpr Occ dd = Occ::Double;

}  // namespace

SparsePolynomial SparsePolynomial::constant(Complex c) {
    SparsePolynomial p;
    p.add_term(Monomial{}, c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(const Symbol& s) {
    SparsePolynomial p;
    p.add_term(Monomial{{s, 1}}, 1.0);
    return p;
}

void SparsePolynomial::add_term(const Monomial& m, Complex coeff) {
    if (coeff == 0.0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
}

int SparsePolynomial::degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int total = 0;
        for (const auto& [sym, exp] : m) total += exp;
        deg = std::max(deg, total);
    }
    return deg;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    SparsePolynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m = ma;
            for (const auto& [sym, exp] : mb) m[sym] += exp;
            out.add_term(m, ca * cb);
        }
    return out;
}

SparsePolynomial SparsePolynomial::scaled(Complex c) const {
    SparsePolynomial out;
    if (c == 0.0) return out;
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

SparsePolynomial SparsePolynomial::differentiate(const Symbol& s) const {
    SparsePolynomial out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(s);
        if (it == m.end()) continue;
        Monomial reduced = m;
        int exp = it->second;
        if (exp == 1)
            reduced.erase(s);
        else
            reduced[s] = exp - 1;
        out.add_term(reduced, c * static_cast<double>(exp));
    }
    return out;
}

SparsePolynomial SparsePolynomial::with_copy(Family f, std::uint32_t copy) const {
    SparsePolynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial renamed;
        for (const auto& [sym, exp] : m) {
            Symbol s = sym;
            if (s.kind == Symbol::Kind::Auxiliary &&
                s.family == static_cast<std::uint8_t>(f))
                s.id = copy;
            renamed[s] += exp;
        }
        out.add_term(renamed, c);
    }
    return out;
}

bool SparsePolynomial::has_auxiliary() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [sym, exp] : m)
            if (sym.kind == Symbol::Kind::Auxiliary) return true;
    return false;
}

namespace {

SparsePolynomial omega_contract(const SparsePolynomial& product, Family f,
                                std::uint32_t copy_a, std::uint32_t copy_b) {
    Symbol au = Symbol::auxiliary(f, 0, copy_a);
    Symbol ad = Symbol::auxiliary(f, 1, copy_a);
    Symbol bu = Symbol::auxiliary(f, 0, copy_b);
    Symbol bd = Symbol::auxiliary(f, 1, copy_b);
    return product.differentiate(au).differentiate(bd) -
           product.differentiate(bu).differentiate(ad);
}

SparsePolynomial linear_form(const std::shared_ptr<const Sector>& sector, Family f,
                             const std::array<BasisLabel, 2>& labels) {
    // labels[0] carries the up variable, labels[1] the down variable
    SparsePolynomial p;
    for (int spin = 0; spin < 2; ++spin) {
        Monomial m;
        m[Symbol::amplitude(static_cast<std::uint32_t>(
            sector->index_of(labels[static_cast<std::size_t>(spin)])))] = 1;
        m[Symbol::auxiliary(f, spin, 0)] = 1;
        p.add_term(m, 1.0);
    }
    return p;
}

FormCollection build_forms() {
    FormCollection fc;
    fc.sector = enumerate_sector(3, 3);
    const Occ spins[2] = {u, d};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Monomial m;
                m[Symbol::amplitude(static_cast<std::uint32_t>(
                    fc.sector->index_of(BasisLabel{spins[i], spins[j], spins[k]})))] = 1;
                m[Symbol::auxiliary(Family::X, i, 0)] = 1;
                m[Symbol::auxiliary(Family::Y, j, 0)] = 1;
                m[Symbol::auxiliary(Family::Z, k, 0)] = 1;
                fc.M.add_term(m, 1.0);
            }
    auto lab = [&](Occ a, Occ b, Occ c) { return BasisLabel{a, b, c}; };
    fc.m21 = linear_form(fc.sector, Family::X, {lab(u, dd, e0), lab(d, dd, e0)});
    fc.m31 = linear_form(fc.sector, Family::X, {lab(u, e0, dd), lab(d, e0, dd)});
    fc.m12 = linear_form(fc.sector, Family::Y, {lab(dd, u, e0), lab(dd, d, e0)});
    fc.m32 = linear_form(fc.sector, Family::Y, {lab(e0, u, dd), lab(e0, d, dd)});
    fc.m23 = linear_form(fc.sector, Family::Z, {lab(e0, dd, u), lab(e0, dd, d)});
    fc.m13 = linear_form(fc.sector, Family::Z, {lab(dd, e0, u), lab(dd, e0, d)});
    return fc;
}

const SparsePolynomial& base_form(Base b) {
    const FormCollection& fc = forms();
    switch (b) {
        case Base::M: return fc.M;
        case Base::m12: return fc.m12;
        case Base::m13: return fc.m13;
        case Base::m21: return fc.m21;
        case Base::m23: return fc.m23;
        case Base::m31: return fc.m31;
        case Base::m32: return fc.m32;
    }
    throw std::domain_error("invalid form selector");
}

std::vector<Family> slot_families(Base b) {
    switch (b) {
        case Base::M: return {Family::X, Family::Y, Family::Z};
        case Base::m21:
        case Base::m31: return {Family::X};
        case Base::m12:
        case Base::m32: return {Family::Y};
        case Base::m23:
        case Base::m13: return {Family::Z};
    }
    throw std::domain_error("invalid form selector");
}

}  // namespace

const FormCollection& forms() {
    static const FormCollection fc = build_forms();
    return fc;
}

SparsePolynomial transvect(const SparsePolynomial& a, const SparsePolynomial& b, Family f) {
    SparsePolynomial product = a.with_copy(f, 1) * b.with_copy(f, 2);
    SparsePolynomial result = omega_contract(product, f, 1, 2);
    return result.with_copy(f, 0);
}

SparsePolynomial evaluate_recipe(const TransvectionRecipe& recipe) {
    struct Slot {
        std::size_t factor;
        Family family;
    };
    std::map<char, std::vector<Slot>> letters;
    std::vector<SparsePolynomial> parts;  // per-factor polynomials, copies by slot

    // Give every slot of every factor its own copy tag so letters address
    // exactly one variable pair: copy = factor_index * 4 + slot_index + 1.
    for (std::size_t fi = 0; fi < recipe.factors.size(); ++fi) {
        const FactorRef& fr = recipe.factors[fi];
        std::vector<Family> fams = slot_families(fr.base);
        if (fr.indices.size() != fams.size())
            throw std::domain_error("factor index count does not match the form arity");
        SparsePolynomial p = base_form(fr.base);
        for (std::size_t si = 0; si < fams.size(); ++si) {
            std::uint32_t copy = static_cast<std::uint32_t>(fi * 4 + si + 1);
            p = p.with_copy(fams[si], copy);
            letters[fr.indices[si]].push_back({fi, fams[si]});
        }
        parts.push_back(std::move(p));
    }
    // NB: relabeling slot by slot works because each factor has at most one
    // slot per family.

    for (const auto& [letter, slots] : letters) {
        if (slots.size() != 2)
            throw std::domain_error(std::string("contraction index '") + letter +
                                    "' must appear exactly twice");
        if (slots[0].family != slots[1].family)
            throw std::domain_error(std::string("contraction index '") + letter +
                                    "' joins slots of different families");
    }

    // Union of factors into components; contract cheap pairs first to keep the
    // intermediate polynomials small.
    std::vector<std::size_t> component(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) component[i] = i;
    auto root = [&](std::size_t i) {
        while (component[i] != i) i = component[i];
        return i;
    };
    auto copy_of = [&](const Slot& s) {
        std::vector<Family> fams = slot_families(recipe.factors[s.factor].base);
        for (std::size_t si = 0; si < fams.size(); ++si)
            if (fams[si] == s.family)
                return static_cast<std::uint32_t>(s.factor * 4 + si + 1);
        throw std::domain_error("slot family not present on factor");
    };

    std::vector<char> pending;
    for (const auto& [letter, slots] : letters) pending.push_back(letter);

    while (!pending.empty()) {
        std::size_t best = 0;
        std::size_t best_cost = static_cast<std::size_t>(-1);
        for (std::size_t i = 0; i < pending.size(); ++i) {
            const auto& slots = letters.at(pending[i]);
            std::size_t ra = root(slots[0].factor);
            std::size_t rb = root(slots[1].factor);
            std::size_t cost = ra == rb ? parts[ra].n_terms()
                                        : parts[ra].n_terms() * parts[rb].n_terms();
            if (cost < best_cost) {
                best_cost = cost;
                best = i;
            }
        }
        char letter = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        const auto& slots = letters.at(letter);
        std::size_t ra = root(slots[0].factor);
        std::size_t rb = root(slots[1].factor);
        SparsePolynomial merged = ra == rb ? parts[ra] : parts[ra] * parts[rb];
        merged = omega_contract(merged, slots[0].family, copy_of(slots[0]), copy_of(slots[1]));
        component[rb] = ra;
        parts[ra] = std::move(merged);
        if (ra != rb) parts[rb] = SparsePolynomial();
    }

    SparsePolynomial result = SparsePolynomial::constant(recipe.coeff);
    std::vector<bool> seen(parts.size(), false);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::size_t r = root(i);
        if (seen[r]) continue;
        seen[r] = true;
        result = result * parts[r];
    }
    if (result.has_auxiliary())
        throw std::domain_error("recipe left uncontracted auxiliary variables");
    return result;
}

namespace {

TransvectionRecipe make_recipe(std::initializer_list<FactorRef> factors, Complex coeff = 1.0) {
    TransvectionRecipe r;
    r.factors = factors;
    r.coeff = coeff;
    return r;
}

const std::map<Named, TransvectionRecipe>& recipe_table() {
    static const std::map<Named, TransvectionRecipe> table = {
        {Named::I1, make_recipe({{Base::M, "ijk"},
                                 {Base::m31, "i"},
                                 {Base::m12, "j"},
                                 {Base::m23, "k"}})},
        {Named::I2, make_recipe({{Base::M, "ijk"},
                                 {Base::m21, "i"},
                                 {Base::m32, "j"},
                                 {Base::m13, "k"}})},
        {Named::IBC, make_recipe({{Base::m21, "i"},
                                  {Base::M, "ijk"},
                                  {Base::M, "ljk"},
                                  {Base::m31, "l"},
                                  {Base::m12, "n"},
                                  {Base::m32, "n"},
                                  {Base::m13, "p"},
                                  {Base::m23, "p"}})},
        {Named::IAC, make_recipe({{Base::m32, "j"},
                                  {Base::M, "ijk"},
                                  {Base::M, "ilk"},
                                  {Base::m12, "l"},
                                  {Base::m21, "n"},
                                  {Base::m31, "n"},
                                  {Base::m13, "p"},
                                  {Base::m23, "p"}})},
        {Named::IAB, make_recipe({{Base::m23, "k"},
                                  {Base::M, "ijk"},
                                  {Base::M, "ijl"},
                                  {Base::m13, "l"},
                                  {Base::m12, "n"},
                                  {Base::m32, "n"},
                                  {Base::m21, "p"},
                                  {Base::m31, "p"}})},
        {Named::IABC1, make_recipe({{Base::m23, "k"},
                                    {Base::M, "ijk"},
                                    {Base::M, "ijl"},
                                    {Base::M, "npl"},
                                    {Base::m31, "n"},
                                    {Base::m12, "p"},
                                    {Base::m31, "q"},
                                    {Base::m21, "q"},
                                    {Base::m32, "r"},
                                    {Base::m12, "r"},
                                    {Base::m23, "s"},
                                    {Base::m13, "s"}})},
        {Named::IABC2, make_recipe({{Base::m13, "k"},
                                    {Base::M, "ijk"},
                                    {Base::M, "ijl"},
                                    {Base::M, "npl"},
                                    {Base::m21, "n"},
                                    {Base::m32, "p"},
                                    {Base::m31, "q"},
                                    {Base::m21, "q"},
                                    {Base::m32, "r"},
                                    {Base::m12, "r"},
                                    {Base::m23, "s"},
                                    {Base::m13, "s"}})},
        {Named::IA1, make_recipe({{Base::m21, "i"},
                                  {Base::M, "ijk"},
                                  {Base::M, "ljk"},
                                  {Base::m31, "l"}})},
        {Named::IA2, make_recipe({{Base::m21, "i"},
                                  {Base::M, "ijk"},
                                  {Base::M, "ljk"},
                                  {Base::M, "lnp"},
                                  {Base::M, "qnp"},
                                  {Base::m31, "q"},
                                  {Base::m21, "r"},
                                  {Base::m31, "r"}})},
        {Named::IA2Alt, make_recipe({{Base::M, "ijk"},
                                     {Base::M, "ljk"},
                                     {Base::M, "lnp"},
                                     {Base::M, "inp"},
                                     {Base::m21, "q"},
                                     {Base::m31, "q"},
                                     {Base::m21, "r"},
                                     {Base::m31, "r"}},
                                    0.5)},
        {Named::IAL, make_recipe({{Base::m21, "r"}, {Base::m31, "r"}})},
    };
    return table;
}

}  // namespace

const TransvectionRecipe& named_recipe(Named which) { return recipe_table().at(which); }

const SparsePolynomial& named_polynomial(Named which) {
    static std::map<Named, SparsePolynomial> cache;
    auto it = cache.find(which);
    if (it == cache.end()) it = cache.emplace(which, evaluate_recipe(named_recipe(which))).first;
    return it->second;
}

std::string named_label(Named which) {
    switch (which) {
        case Named::I1: return "I1";
        case Named::I2: return "I2";
        case Named::IBC: return "IBC";
        case Named::IAC: return "IAC";
        case Named::IAB: return "IAB";
        case Named::IABC1: return "IABC1";
        case Named::IABC2: return "IABC2";
        case Named::IA1: return "IA1";
        case Named::IA2: return "IA2";
        case Named::IA2Alt: return "IA2alt";
        case Named::IAL: return "IAL";
    }
    return "?";
}

std::vector<Named> all_named() {
    return {Named::I1,    Named::I2,  Named::IBC, Named::IAC,    Named::IAB, Named::IABC1,
            Named::IABC2, Named::IA1, Named::IA2, Named::IA2Alt, Named::IAL};
}

Complex evaluate_at(const SparsePolynomial& poly, const StateVector& state) {
    if (state.sector().n_modes() != 3 || state.sector().n_particles() != 3)
        throw std::domain_error("omega polynomials are defined over the (3, 3) sector");
    Complex sum = 0.0;
    for (const auto& [m, c] : poly.terms()) {
        Complex term = c;
        for (const auto& [sym, exp] : m) {
            if (sym.kind != Symbol::Kind::Amplitude)
                throw std::domain_error("polynomial still contains auxiliary variables");
            Complex a = state.amp(static_cast<std::size_t>(sym.id));
            for (int k = 0; k < exp; ++k) term *= a;
        }
        sum += term;
    }
    return sum;
}

Complex proportionality_constant(const SparsePolynomial& poly,
                                 const std::function<Complex(const StateVector&)>& reference,
                                 int n_samples, std::uint64_t seed) {
    if (n_samples < 3) throw std::domain_error("proportionality check needs >= 3 samples");
    auto sector = forms().sector;
    bool have_c = false;
    Complex c = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        StateVector psi = slocc::random_state(sector, seed + static_cast<std::uint64_t>(i));
        Complex p = evaluate_at(poly, psi);
        Complex r = reference(psi);
        if (!have_c) {
            if (std::abs(r) < 1e-14) continue;
            c = p / r;
            have_c = true;
            continue;
        }
        if (std::abs(p - c * r) > 1e-8 * std::max({std::abs(p), std::abs(c * r), 1e-30}))
            throw std::runtime_error("inconsistent proportionality ratio");
    }
    if (!have_c) throw std::runtime_error("reference vanished on every sample");
    return c;
}

int rank_of_set(const std::vector<SparsePolynomial>& polys, int n_samples,
                std::uint64_t seed) {
    if (n_samples < static_cast<int>(polys.size()))
        throw std::domain_error("rank check needs at least as many samples as polynomials");
    auto sector = forms().sector;
    Eigen::MatrixXcd evals(n_samples, static_cast<Eigen::Index>(polys.size()));
    for (int i = 0; i < n_samples; ++i) {
        StateVector psi = slocc::random_state(sector, seed + static_cast<std::uint64_t>(i));
        for (std::size_t j = 0; j < polys.size(); ++j)
            evals(i, static_cast<Eigen::Index>(j)) = evaluate_at(polys[j], psi);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(evals);
    double cutoff = 1e-8 * svd.singularValues()(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > cutoff) ++rank;
    return rank;
}

bool is_g815_admissible(const SparsePolynomial& poly) {
    // the diagonal scalings act per mode, so each monomial must carry equal
    // counts of the four occupation tags at every mode position separately
    const auto& basis = forms().sector->basis();
    for (const auto& [m, c] : poly.terms()) {
        std::array<std::array<int, 4>, 3> counts{};
        for (const auto& [sym, exp] : m) {
            if (sym.kind != Symbol::Kind::Amplitude) return false;
            const BasisLabel& label = basis[sym.id];
            for (std::size_t mode = 0; mode < 3; ++mode)
                counts[mode][static_cast<std::size_t>(label[mode])] += exp;
        }
        for (const auto& c4 : counts)
            if (c4[0] != c4[1] || c4[0] != c4[2] || c4[0] != c4[3]) return false;
    }
    return true;
}

std::vector<TransvectionRecipe> degree16_candidates() {
    // Chains of four trilinear factors closed by linear forms, padded with
    // scalar linear-pair transvections up to twelve linear factors; plus
    // products of two degree-8-style chains.
    std::vector<TransvectionRecipe> out;
    auto pads = [](std::initializer_list<FactorRef> head) {
        TransvectionRecipe r;
        r.factors = head;
        for (const FactorRef& f : {FactorRef{Base::m31, "q"}, FactorRef{Base::m21, "q"},
                                   FactorRef{Base::m32, "r"}, FactorRef{Base::m12, "r"},
                                   FactorRef{Base::m23, "s"}, FactorRef{Base::m13, "s"},
                                   FactorRef{Base::m31, "t"}, FactorRef{Base::m21, "t"}})
            r.factors.push_back(f);
        return r;
    };
    // four-M chains: M(ijk) M(ijl) M(lnp)?? -> close remaining z and x ends
    out.push_back(pads({{Base::M, "ijk"},
                        {Base::M, "ijl"},
                        {Base::M, "anp"},
                        {Base::M, "bnp"},
                        {Base::m23, "k"},
                        {Base::m13, "l"},
                        {Base::m21, "a"},
                        {Base::m31, "b"}}));
    out.push_back(pads({{Base::M, "ijk"},
                        {Base::M, "ijl"},
                        {Base::M, "anp"},
                        {Base::M, "bnp"},
                        {Base::m13, "k"},
                        {Base::m23, "l"},
                        {Base::m31, "a"},
                        {Base::m21, "b"}}));
    // connected chains through all four trilinear factors
    out.push_back(pads({{Base::M, "ijk"},
                        {Base::M, "ijl"},
                        {Base::M, "npl"},
                        {Base::M, "npm"},
                        {Base::m23, "k"},
                        {Base::m13, "m"},
                        {Base::m21, "w"},
                        {Base::m31, "w"}}));
    out.push_back(pads({{Base::M, "ijk"},
                        {Base::M, "ijl"},
                        {Base::M, "npl"},
                        {Base::M, "nwm"},
                        {Base::m23, "k"},
                        {Base::m13, "m"},
                        {Base::m12, "p"},
                        {Base::m32, "w"}}));
    out.push_back(pads({{Base::M, "ijk"},
                        {Base::M, "iwl"},
                        {Base::M, "npl"},
                        {Base::M, "npm"},
                        {Base::m23, "k"},
                        {Base::m13, "m"},
                        {Base::m12, "j"},
                        {Base::m32, "w"}}));
    return out;
}

bool degree16_probe(int n_samples, std::uint64_t seed) {
    std::vector<SparsePolynomial> candidates;
    for (const auto& recipe : degree16_candidates()) {
        SparsePolynomial p = evaluate_recipe(recipe);
        if (p.is_zero()) continue;
        // inadmissible outputs are not invariants of the diagonal subgroup and
        // are discarded by the search, exactly like non-balanced recipes
        if (!is_g815_admissible(p)) continue;
        candidates.push_back(std::move(p));
    }
    if (candidates.empty()) return false;  // the probe must not be vacuous

    // degree-16 products of the seven generators: 4+4+4+4, 4+4+8, 8+8, 4+12
    std::vector<std::vector<Named>> products;
    const Named deg4[] = {Named::I1, Named::I2};
    const Named deg8[] = {Named::IBC, Named::IAC, Named::IAB};
    const Named deg12[] = {Named::IABC1, Named::IABC2};
    for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b)
            for (int c = b; c < 2; ++c)
                for (int e = c; e < 2; ++e)
                    products.push_back({deg4[a], deg4[b], deg4[c], deg4[e]});
    for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b)
            for (Named h : deg8) products.push_back({deg4[a], deg4[b], h});
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) products.push_back({deg8[a], deg8[b]});
    for (Named f : deg4)
        for (Named t : deg12) products.push_back({f, t});

    auto sector = forms().sector;
    Eigen::MatrixXcd basis_vals(n_samples, static_cast<Eigen::Index>(products.size()));
    Eigen::MatrixXcd cand_vals(n_samples, static_cast<Eigen::Index>(candidates.size()));
    for (int i = 0; i < n_samples; ++i) {
        StateVector psi = slocc::random_state(sector, seed + static_cast<std::uint64_t>(i));
        for (std::size_t j = 0; j < products.size(); ++j) {
            Complex v = 1.0;
            for (Named g : products[j]) v *= evaluate_at(named_polynomial(g), psi);
            basis_vals(i, static_cast<Eigen::Index>(j)) = v;
        }
        for (std::size_t j = 0; j < candidates.size(); ++j)
            cand_vals(i, static_cast<Eigen::Index>(j)) = evaluate_at(candidates[j], psi);
    }
    auto solver = basis_vals.completeOrthogonalDecomposition();
    for (Eigen::Index j = 0; j < cand_vals.cols(); ++j) {
        Eigen::VectorXcd y = cand_vals.col(j);
        Eigen::VectorXcd x = solver.solve(y);
        double residual = (basis_vals * x - y).norm();
        if (residual > 1e-6 * std::max(y.norm(), 1e-30)) return false;
    }
    return true;
}

}  // namespace fermi::omega
