#include <orthowg/trace.hpp>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orthowg {

// ---------------------------------------------------------------------------
// words and monomials
// ---------------------------------------------------------------------------

Word transpose_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& s : out) s.transpose = !s.transpose;
    return out;
}

namespace {

Word min_rotation(const Word& w) {
    Word best = w;
    Word rot = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

}  // namespace

Word canonical_word(const Word& w) {
    Word stripped;
    for (const auto& s : w)
        if (s.id != kIdentitySymbol) stripped.push_back(s);
    if (stripped.empty()) return stripped;
    Word a = min_rotation(stripped);
    Word b = min_rotation(transpose_word(stripped));
    return a < b ? a : b;
}

std::string TraceMonomial::to_string() const {
    if (words.empty()) return "1";
    std::ostringstream os;
    for (const auto& w : words) {
        os << "Tr(";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << " ";
            os << w[i].id;
            if (w[i].transpose) os << "^t";
        }
        os << ")";
    }
    return os.str();
}

CanonicalMonomial make_monomial(const std::vector<Word>& raw_words) {
    CanonicalMonomial out;
    for (const auto& w : raw_words) {
        Word c = canonical_word(w);
        if (c.empty())
            ++out.d_power;
        else
            out.mono.words.push_back(std::move(c));
    }
    std::sort(out.mono.words.begin(), out.mono.words.end());
    return out;
}

// ---------------------------------------------------------------------------
// sparse exact matrices
// ---------------------------------------------------------------------------

SparseMat SparseMat::identity(int d) {
    SparseMat m;
    m.d_ = d;
    m.rows_.resize(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) m.rows_[static_cast<size_t>(i)] = {{i, Rat(1)}};
    return m;
}

SparseMat SparseMat::from_dense(const std::vector<std::vector<Rat>>& rows) {
    SparseMat m;
    m.d_ = static_cast<int>(rows.size());
    m.rows_.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.d_)
            throw std::invalid_argument("matrix must be square");
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] != 0) m.rows_[i].emplace_back(static_cast<int>(j), rows[i][j]);
    }
    return m;
}

SparseMat SparseMat::from_entries(int d, const std::vector<std::tuple<int, int, Rat>>& entries) {
    std::vector<std::vector<Rat>> dense(static_cast<size_t>(d),
                                        std::vector<Rat>(static_cast<size_t>(d), Rat(0)));
    for (const auto& [r, c, v] : entries) dense[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] += v;
    return from_dense(dense);
}

SparseMat SparseMat::transpose() const {
    SparseMat m;
    m.d_ = d_;
    m.rows_.resize(static_cast<size_t>(d_));
    for (int i = 0; i < d_; ++i)
        for (const auto& [j, v] : rows_[static_cast<size_t>(i)])
            m.rows_[static_cast<size_t>(j)].emplace_back(i, v);
    for (auto& r : m.rows_)
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (d_ != o.d_) throw std::invalid_argument("matrix dimension mismatch");
    SparseMat m;
    m.d_ = d_;
    m.rows_.resize(static_cast<size_t>(d_));
    std::vector<Rat> acc(static_cast<size_t>(d_), Rat(0));
    std::vector<char> used(static_cast<size_t>(d_), 0);
    for (int i = 0; i < d_; ++i) {
        std::vector<int> cols;
        for (const auto& [k, v] : rows_[static_cast<size_t>(i)]) {
            for (const auto& [j, w] : o.rows_[static_cast<size_t>(k)]) {
                if (!used[static_cast<size_t>(j)]) {
                    used[static_cast<size_t>(j)] = 1;
                    acc[static_cast<size_t>(j)] = 0;
                    cols.push_back(j);
                }
                acc[static_cast<size_t>(j)] += v * w;
            }
        }
        std::sort(cols.begin(), cols.end());
        for (int j : cols) {
            if (acc[static_cast<size_t>(j)] != 0)
                m.rows_[static_cast<size_t>(i)].emplace_back(j, acc[static_cast<size_t>(j)]);
            used[static_cast<size_t>(j)] = 0;
        }
    }
    return m;
}

Rat SparseMat::trace() const {
    Rat t(0);
    for (int i = 0; i < d_; ++i)
        for (const auto& [j, v] : rows_[static_cast<size_t>(i)])
            if (j == i) t += v;
    return t;
}

Rat SparseMat::entry(int row, int col) const {
    for (const auto& [j, v] : rows_[static_cast<size_t>(row) - 1])
        if (j == col - 1) return v;
    return Rat(0);
}

void MatrixSet::insert(const std::string& id, SparseMat m) {
    if (m.dim() != d_) throw std::invalid_argument("matrix '" + id + "' has wrong dimension");
    mats_.insert_or_assign(id, std::move(m));
    cache_.clear();
    transposed_.clear();
}

bool MatrixSet::contains(const std::string& id) const {
    return id == kIdentitySymbol || mats_.count(id) > 0;
}

const SparseMat& MatrixSet::matrix(const std::string& id) const {
    if (auto it = mats_.find(id); it != mats_.end()) return it->second;
    if (id == kIdentitySymbol) {
        auto it = transposed_.find(kIdentitySymbol);
        if (it == transposed_.end())
            it = transposed_.emplace(kIdentitySymbol, SparseMat::identity(d_)).first;
        return it->second;
    }
    throw std::invalid_argument("unknown matrix symbol '" + id + "'");
}

Rat MatrixSet::trace_of_word(const Word& w) const {
    Word c = canonical_word(w);
    if (c.empty()) return Rat(d_);
    if (auto it = cache_.find(c); it != cache_.end()) return it->second;
    auto resolve = [&](const Symbol& s) -> const SparseMat& {
        if (!s.transpose) return matrix(s.id);
        std::string key = s.id + "^t";
        auto it = transposed_.find(key);
        if (it == transposed_.end()) it = transposed_.emplace(key, matrix(s.id).transpose()).first;
        return it->second;
    };
    SparseMat prod = resolve(c[0]);
    for (size_t i = 1; i < c.size(); ++i) prod = prod * resolve(c[i]);
    Rat t = prod.trace();
    cache_.emplace(std::move(c), t);
    return t;
}

Rat tr_sigma(const Permutation& sigma, const std::vector<SparseMat>& matrices) {
    if (static_cast<int>(matrices.size()) != sigma.size())
        throw std::invalid_argument("tr_sigma needs one matrix per point");
    int d = matrices.empty() ? 0 : matrices[0].dim();
    for (const auto& m : matrices)
        if (m.dim() != d) throw std::invalid_argument("matrix dimension mismatch");
    Rat out(1);
    for (const auto& cycle : sigma.cycles()) {
        SparseMat prod = matrices[static_cast<size_t>(cycle[0]) - 1];
        for (size_t i = 1; i < cycle.size(); ++i)
            prod = prod * matrices[static_cast<size_t>(cycle[i]) - 1];
        out *= prod.trace();
    }
    return out;
}

// ---------------------------------------------------------------------------
// trace expressions
// ---------------------------------------------------------------------------

TraceExpression TraceExpression::constant(const RatFunc& c) {
    TraceExpression e;
    e.add(TraceMonomial{}, c);
    return e;
}

void TraceExpression::add(const TraceMonomial& mono, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

TraceExpression TraceExpression::operator+(const TraceExpression& o) const {
    TraceExpression out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, c);
    return out;
}

TraceExpression TraceExpression::operator-(const TraceExpression& o) const {
    TraceExpression out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, -c);
    return out;
}

TraceExpression TraceExpression::operator*(const TraceExpression& o) const {
    TraceExpression out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            TraceMonomial m;
            m.words = ma.words;
            m.words.insert(m.words.end(), mb.words.begin(), mb.words.end());
            std::sort(m.words.begin(), m.words.end());
            out.add(m, ca * cb);
        }
    return out;
}

TraceExpression TraceExpression::operator*(const RatFunc& c) const {
    TraceExpression out;
    for (const auto& [m, coeff] : terms_) out.add(m, coeff * c);
    return out;
}

Rat TraceExpression::evaluate(const MatrixSet& mats) const {
    Rat d(mats.dim());
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c.evaluate(d);
        for (const auto& w : m.words) v *= mats.trace_of_word(w);
        acc += v;
    }
    return acc;
}

std::string TraceExpression::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (!m.words.empty()) os << "*" << m.to_string();
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// word specifications
// ---------------------------------------------------------------------------

int WordSpec::total_slots() const {
    int n = 0;
    for (const auto& t : haar_traces) n += static_cast<int>(t.size());
    return n;
}

WordSpec WordSpec::concat(const WordSpec& a, const WordSpec& b) {
    WordSpec out = a;
    out.haar_traces.insert(out.haar_traces.end(), b.haar_traces.begin(), b.haar_traces.end());
    out.plain_traces.insert(out.plain_traces.end(), b.plain_traces.begin(), b.plain_traces.end());
    return out;
}

Permutation WordSpec::gamma() const {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (const auto& t : haar_traces) {
        std::vector<int> c(t.size());
        std::iota(c.begin(), c.end(), next);
        next += static_cast<int>(t.size());
        cycles.push_back(std::move(c));
    }
    return Permutation::from_cycles(total_slots(), cycles);
}

std::vector<int> WordSpec::eps() const {
    std::vector<int> out;
    for (const auto& t : haar_traces)
        for (const auto& s : t) out.push_back(s.eps);
    return out;
}

std::vector<int> WordSpec::labels() const {
    std::vector<int> out;
    for (const auto& t : haar_traces)
        for (const auto& s : t) {
            if (s.label < 1) throw std::invalid_argument("haar labels must be positive");
            out.push_back(s.label);
        }
    return out;
}

std::vector<Word> WordSpec::slot_words() const {
    std::vector<Word> out;
    for (const auto& t : haar_traces)
        for (const auto& s : t) out.push_back(s.word);
    return out;
}

// ---------------------------------------------------------------------------
// the pairing calculus
// ---------------------------------------------------------------------------

SignedPermutation dot_epsilon(const Pairing& p, const Pairing& q, const Permutation& gamma,
                              const std::vector<int>& eps) {
    const int n = p.size();
    if (q.size() != n || gamma.size() != n || static_cast<int>(eps.size()) != n)
        throw std::invalid_argument("dot_epsilon size mismatch");
    auto gd = SignedPermutation::embed(gamma) * SignedPermutation::delta(n);
    auto de = SignedPermutation::delta_epsilon(eps);
    auto middle = SignedPermutation::embed(p.as_permutation()) *
                  SignedPermutation::embed_negative(q.as_permutation());
    return gd.inverse() * de * middle * de * gd;
}

PairingTrace pairing_to_trace(const SignedPermutation& r, bool opposite_representative) {
    const int n = r.n();
    auto delta = SignedPermutation::delta(n);
    auto t = r * delta;  // t(x) = r(-x)
    PairingTrace out;
    std::vector<char> seen(static_cast<size_t>(2 * n), 0);
    auto idx = [n](int k) {
        int a = k > 0 ? k : -k;
        return static_cast<size_t>(2 * (a - 1) + (k < 0 ? 1 : 0));
    };
    std::vector<int> pi_img(static_cast<size_t>(n), 0);
    out.eta.assign(static_cast<size_t>(n), 1);
    for (int a = 1; a <= n; ++a) {
        if (seen[idx(a)] || seen[idx(-a)]) continue;
        // a is the least absolute value in its cycle pair; the canonical
        // representative is the cycle containing +a
        int start = opposite_representative ? -a : a;
        std::vector<int> cycle;
        for (int x = start; !seen[idx(x)]; x = t.apply(x)) {
            seen[idx(x)] = 1;
            seen[idx(-x)] = 1;  // partner cycle is the elementwise negation
            cycle.push_back(x);
        }
        for (size_t i = 0; i < cycle.size(); ++i) {
            int cur = cycle[i], nxt = cycle[(i + 1) % cycle.size()];
            pi_img[static_cast<size_t>(std::abs(cur)) - 1] = std::abs(nxt);
            out.eta[static_cast<size_t>(std::abs(cur)) - 1] = cur > 0 ? 1 : -1;
        }
        out.signed_cycles.push_back(std::move(cycle));
    }
    out.pi = Permutation(std::move(pi_img));
    return out;
}

std::vector<Word> monomial_words(const PairingTrace& pt, const std::vector<Word>& slots) {
    std::vector<Word> out;
    for (const auto& cycle : pt.signed_cycles) {
        Word w;
        for (int l : cycle) {
            const Word& base = slots[static_cast<size_t>(std::abs(l)) - 1];
            Word piece = l > 0 ? base : transpose_word(base);
            w.insert(w.end(), piece.begin(), piece.end());
        }
        out.push_back(std::move(w));
    }
    return out;
}

bool parity_check(const Pairing& p, const Pairing& q, const Permutation& gamma,
                  const std::vector<int>& eps) {
    for (const auto& c : gamma.cycles())
        if (c.size() % 2 != 0)
            throw std::invalid_argument("parity_check needs even gamma cycles");
    for (size_t k = 0; k < eps.size(); ++k)
        if (eps[k] != (k % 2 == 0 ? 1 : -1))
            throw std::invalid_argument("parity_check needs alternating epsilon");
    auto pt = pairing_to_trace(dot_epsilon(p, q, gamma, eps));
    for (int k = 1; k <= pt.pi.size(); ++k)
        if ((pt.pi.apply(k) - k) % 2 != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// expectation engine
// ---------------------------------------------------------------------------

namespace {

struct BlockSetup {
    std::vector<std::vector<int>> blocks;           // slot indices per haar label block
    std::vector<std::vector<Pairing>> pairings;     // block-local pairings
};

// groups slots by haar label; throws when a label has an odd count (handled
// by the caller as a zero expectation)
std::optional<BlockSetup> block_setup(const std::vector<int>& labels) {
    std::map<int, std::vector<int>> by_label;
    for (size_t i = 0; i < labels.size(); ++i)
        by_label[labels[i]].push_back(static_cast<int>(i) + 1);
    BlockSetup out;
    for (auto& [label, elements] : by_label) {
        if (elements.size() % 2 != 0) return std::nullopt;
        out.blocks.push_back(elements);
        out.pairings.push_back(all_pairings(static_cast<int>(elements.size())));
    }
    return out;
}

Pairing assemble(const BlockSetup& setup, const std::vector<size_t>& choice) {
    int n = 0;
    for (const auto& b : setup.blocks) n += static_cast<int>(b.size());
    std::vector<std::pair<int, int>> pairs;
    for (size_t b = 0; b < setup.blocks.size(); ++b) {
        const auto& elements = setup.blocks[b];
        for (auto [r, s] : setup.pairings[b][choice[b]].pairs())
            pairs.emplace_back(elements[static_cast<size_t>(r) - 1],
                               elements[static_cast<size_t>(s) - 1]);
    }
    return Pairing::from_pairs(n, pairs);
}

bool advance(std::vector<size_t>& choice, const BlockSetup& setup) {
    for (size_t b = 0; b < choice.size(); ++b) {
        if (++choice[b] < setup.pairings[b].size()) return true;
        choice[b] = 0;
    }
    return false;
}

// Weight: visits every (p, q) with p, q <= ker(labels) along with the product
// of per-block Weingarten entries. Entry matrices per block are precomputed.
template <typename Scalar, typename EntryFn, typename Visit>
void for_each_term(const WordSpec& spec, const BlockSetup& setup, EntryFn block_entry,
                   long max_combinations, Visit visit) {
    // per block: matrix of Weingarten entries between block-local pairings
    std::vector<std::vector<std::vector<Scalar>>> entries(setup.blocks.size());
    for (size_t b = 0; b < setup.blocks.size(); ++b) {
        const auto& ps = setup.pairings[b];
        entries[b].assign(ps.size(), std::vector<Scalar>(ps.size()));
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = 0; j < ps.size(); ++j) entries[b][i][j] = block_entry(ps[i], ps[j]);
    }
    double combos = 1;
    for (const auto& ps : setup.pairings) combos *= static_cast<double>(ps.size());
    if (combos * combos > static_cast<double>(max_combinations))
        throw std::invalid_argument("(p, q) double sum too large for the configured cap");

    const Permutation gamma = spec.gamma();
    const std::vector<int> eps = spec.eps();
    const std::vector<Word> slots = spec.slot_words();

    std::vector<size_t> pc(setup.blocks.size(), 0);
    do {
        Pairing p = assemble(setup, pc);
        std::vector<size_t> qc(setup.blocks.size(), 0);
        do {
            Pairing q = assemble(setup, qc);
            Scalar weight = entries[0][pc[0]][qc[0]];
            for (size_t b = 1; b < setup.blocks.size(); ++b)
                weight = weight * entries[b][pc[b]][qc[b]];
            auto pt = pairing_to_trace(dot_epsilon(p, q, gamma, eps));
            std::vector<Word> words = monomial_words(pt, slots);
            words.insert(words.end(), spec.plain_traces.begin(), spec.plain_traces.end());
            visit(weight, make_monomial(words));
        } while (advance(qc, setup));
    } while (advance(pc, setup));
}

void check_numeric_caps(const BlockSetup& setup) {
    for (const auto& b : setup.blocks) {
        if (b.size() > 10)
            throw std::invalid_argument("numeric engine capped at 10 O-factors per haar label");
        if (b.size() == 10)
            std::fprintf(stderr,
                         "orthowg: warning: n = 10 double sum (945^2 terms), this is slow\n");
    }
}

TraceExpression plain_only_expression(const WordSpec& spec) {
    auto cm = make_monomial(spec.plain_traces);
    TraceExpression e;
    e.add(cm.mono, RatFunc::monomial(Rat(1), cm.d_power));
    return e;
}

}  // namespace

TraceExpression expected_trace_symbolic(const WordSpec& spec, const EngineOptions& opts) {
    const int n = spec.total_slots();
    if (n == 0) return plain_only_expression(spec);
    if (n % 2 != 0) return TraceExpression{};
    auto setup = block_setup(spec.labels());
    if (!setup) return TraceExpression{};
    WeingartenProvider provider(opts.allow_n8_symbolic);
    TraceExpression out;
    for_each_term<RatFunc>(
        spec, *setup,
        [&](const Pairing& a, const Pairing& b) -> RatFunc {
            return provider.table(a.size()).entry_symbolic(a, b);
        },
        opts.max_combinations,
        [&](const RatFunc& weight, const CanonicalMonomial& cm) {
            out.add(cm.mono, weight * RatFunc::monomial(Rat(1), cm.d_power));
        });
    return out;
}

TraceExpression expected_trace_at(const WordSpec& spec, const Rat& d, const EngineOptions& opts) {
    const int n = spec.total_slots();
    if (n == 0) return plain_only_expression(spec);
    if (n % 2 != 0) return TraceExpression{};
    auto setup = block_setup(spec.labels());
    if (!setup) return TraceExpression{};
    check_numeric_caps(*setup);
    WeingartenProvider provider(d);
    TraceExpression out;
    for_each_term<Rat>(
        spec, *setup,
        [&](const Pairing& a, const Pairing& b) -> Rat {
            return provider.table(a.size()).entry(a, b);
        },
        opts.max_combinations,
        [&](const Rat& weight, const CanonicalMonomial& cm) {
            Rat c = weight;
            for (int k = 0; k < cm.d_power; ++k) c *= d;
            out.add(cm.mono, RatFunc(c));
        });
    return out;
}

Rat expected_trace_numeric(const WordSpec& spec, const MatrixSet& mats,
                           const EngineOptions& opts) {
    const int n = spec.total_slots();
    const Rat d(mats.dim());
    for (const auto& t : spec.haar_traces)
        for (const auto& s : t)
            for (const auto& sym : s.word)
                if (!mats.contains(sym.id))
                    throw std::invalid_argument("unknown matrix symbol '" + sym.id + "'");
    for (const auto& w : spec.plain_traces)
        for (const auto& sym : w)
            if (!mats.contains(sym.id))
                throw std::invalid_argument("unknown matrix symbol '" + sym.id + "'");
    if (n == 0) return plain_only_expression(spec).evaluate(mats);
    if (n % 2 != 0) return Rat(0);
    if (mats.dim() < n)
        throw std::invalid_argument("matrix dimension below the slot count; Weingarten tables "
                                    "are only guaranteed invertible for d >= n");
    auto setup = block_setup(spec.labels());
    if (!setup) return Rat(0);
    check_numeric_caps(*setup);
    WeingartenProvider provider(d);
    Rat acc(0);
    for_each_term<Rat>(
        spec, *setup,
        [&](const Pairing& a, const Pairing& b) -> Rat {
            return provider.table(a.size()).entry(a, b);
        },
        opts.max_combinations,
        [&](const Rat& weight, const CanonicalMonomial& cm) {
            Rat v = weight;
            for (int k = 0; k < cm.d_power; ++k) v *= d;
            for (const auto& w : cm.mono.words) v *= mats.trace_of_word(w);
            acc += v;
        });
    return acc;
}

TraceExpression covariance_symbolic(const WordSpec& x, const WordSpec& y,
                                    const EngineOptions& opts) {
    TraceExpression joint = expected_trace_symbolic(WordSpec::concat(x, y), opts);
    TraceExpression ex = expected_trace_symbolic(x, opts);
    TraceExpression ey = expected_trace_symbolic(y, opts);
    return joint - ex * ey;
}

Rat covariance_numeric(const WordSpec& x, const WordSpec& y, const MatrixSet& mats,
                       const EngineOptions& opts) {
    return expected_trace_numeric(WordSpec::concat(x, y), mats, opts) -
           expected_trace_numeric(x, mats, opts) * expected_trace_numeric(y, mats, opts);
}

Rat exact_cumulant(const std::vector<WordSpec>& words, const MatrixSet& mats,
                   const EngineOptions& opts) {
    const int r = static_cast<int>(words.size());
    if (r == 0) throw std::invalid_argument("cumulant of an empty family");
    std::map<std::vector<int>, Rat> subset_cache;
    auto moment_of_block = [&](const std::vector<int>& block) -> Rat {
        auto it = subset_cache.find(block);
        if (it != subset_cache.end()) return it->second;
        WordSpec combined;
        for (int i : block) combined = WordSpec::concat(combined, words[static_cast<size_t>(i) - 1]);
        Rat v = expected_trace_numeric(combined, mats, opts);
        subset_cache.emplace(block, v);
        return v;
    };
    auto moments = [&](const SetPartition& V) -> Rat {
        Rat prod(1);
        for (const auto& b : V.blocks()) prod *= moment_of_block(b);
        return prod;
    };
    return joint_cumulant<Rat>(moments, SetPartition::one_block(r));
}

}  // namespace orthowg
