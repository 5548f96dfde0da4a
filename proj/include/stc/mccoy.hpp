#ifndef STC_MCCOY_HPP
#define STC_MCCOY_HPP

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "stc/commutant.hpp"
#include "stc/matrix.hpp"
#include "stc/mpoly.hpp"

namespace stc {

enum class Letter : uint8_t { A, B };

/// A word U_1...U_k over the alphabet {A, B}; the tested matrix is
/// U_1...U_k (AB - BA).
struct WordId {
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    std::string str() const {
        std::string s;
        for (Letter l : letters) s += (l == Letter::A ? 'A' : 'B');
        return s;
    }
};

enum class STVerdict { ST, NOT_ST };
enum class STMode { Exact, Symbolic };

template <class S>
struct STWitness {
    WordId word;
    S trace;
};

struct STOptions {
    int max_len = 0;       // 0 -> n^2 - 1
    bool early_exit = true;
    int threads = 1;
    bool prune_zero_prefixes = true;
    bool b_branch_first = false;  // enumeration order; the verdict is order-independent
    bool collect_traces = false;  // record every (word, trace); test-scale only
};

template <class S>
struct STReport {
    STVerdict verdict = STVerdict::ST;
    uint64_t words_checked = 0;
    std::optional<STWitness<S>> witness;
    int max_len = 0;
    STMode mode = STMode::Exact;
    std::vector<STWitness<S>> all_traces;  // populated only under collect_traces

    bool is_st() const { return verdict == STVerdict::ST; }
};

namespace detail {

// number of words of length 1..len: 2^(len+1) - 2
inline uint64_t full_word_count(int len) {
    return len <= 0 ? 0 : (uint64_t{1} << (len + 1)) - 2;
}

template <class S>
class StEngine {
  public:
    StEngine(const RMatrix<S>& a, const RMatrix<S>& b, STOptions opts)
        : a_(a), b_(b), c_(commutator(a, b)), opts_(opts) {
        if (opts_.max_len <= 0) opts_.max_len = a.rows() * a.rows() - 1;
        if (opts_.collect_traces) opts_.prune_zero_prefixes = false;
        order_[0] = opts_.b_branch_first ? Letter::B : Letter::A;
        order_[1] = opts_.b_branch_first ? Letter::A : Letter::B;
        if (!ScalarOps<S>::is_zero(c_.trace()))
            throw Error("trace of a commutator must vanish");
        // cache the nonzero commutator entries as (j, i, value) for the
        // sparse trace of P*C
        for (int j = 0; j < c_.rows(); ++j)
            for (int i = 0; i < c_.cols(); ++i)
                if (!ScalarOps<S>::is_zero(c_.at(j, i))) c_entries_.push_back({j, i});
    }

    STReport<S> run() {
        STReport<S> rep;
        rep.max_len = opts_.max_len;
        rep.mode = mode_tag();
        if (opts_.max_len < 1 || c_.is_zero()) {
            // C = 0: every word matrix is zero, all traces vanish
            rep.words_checked = full_word_count(opts_.max_len);
            return rep;
        }
        if (opts_.threads > 1 && opts_.max_len >= 3)
            run_parallel(rep);
        else
            run_sequential(rep);
        rep.verdict = witness_.has_value() ? STVerdict::NOT_ST : STVerdict::ST;
        rep.witness = witness_;
        rep.words_checked = checked_.load();
        rep.all_traces = std::move(collected_);
        return rep;
    }

  private:
    STMode mode_tag() const;

    const RMatrix<S>& letter(Letter l) const { return l == Letter::A ? a_ : b_; }

    // trace(P * C) without forming the product
    S word_trace(const RMatrix<S>& p) const {
        const auto& [j0, i0] = c_entries_[0];
        S acc = p.at(i0, j0) * c_.at(j0, i0);
        for (size_t k = 1; k < c_entries_.size(); ++k) {
            const auto& [j, i] = c_entries_[k];
            acc += p.at(i, j) * c_.at(j, i);
        }
        return acc;
    }

    void record_witness(const std::vector<Letter>& word, S trace) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!witness_.has_value()) witness_ = STWitness<S>{WordId{word}, std::move(trace)};
        if (opts_.early_exit) cancel_.store(true, std::memory_order_relaxed);
    }

    // enter the node for `word` whose letter product is `p`
    void visit(const RMatrix<S>& p, std::vector<Letter>& word, uint64_t& local_checked) {
        if (cancel_.load(std::memory_order_relaxed)) return;
        ++local_checked;
        S tr = word_trace(p);
        if (opts_.collect_traces) {
            std::lock_guard<std::mutex> lock(mu_);
            collected_.push_back({WordId{word}, tr});
        }
        if (!ScalarOps<S>::is_zero(tr)) record_witness(word, std::move(tr));
        if (cancel_.load(std::memory_order_relaxed)) return;
        int k = static_cast<int>(word.size());
        if (k >= opts_.max_len) return;
        if (opts_.prune_zero_prefixes && p.is_zero()) {
            // every extension of a vanished prefix has zero trace
            local_checked += full_word_count(opts_.max_len - k);
            return;
        }
        for (Letter u : order_) {
            word.push_back(u);
            {
                RMatrix<S> child = p * letter(u);
                visit(child, word, local_checked);
            }
            word.pop_back();
        }
    }

    void run_sequential(STReport<S>&) {
        uint64_t local = 0;
        std::vector<Letter> word;
        for (Letter u : order_) {
            word.push_back(u);
            visit(letter(u), word, local);
            word.pop_back();
        }
        checked_.fetch_add(local);
    }

    // split the two depth-1 subtrees below depth 2 into independent jobs
    void run_parallel(STReport<S>&) {
        struct Job {
            std::vector<Letter> word;
            RMatrix<S> prefix;
        };
        std::vector<Job> jobs;
        uint64_t local = 0;
        std::vector<Letter> word;
        for (Letter u1 : order_) {
            word.push_back(u1);
            const RMatrix<S>& p1 = letter(u1);
            visit_shallow(p1, word, local);
            for (Letter u2 : order_) {
                word.push_back(u2);
                RMatrix<S> p2 = p1 * letter(u2);
                visit_shallow(p2, word, local);
                if (!(opts_.prune_zero_prefixes && p2.is_zero()))
                    jobs.push_back({word, std::move(p2)});
                else
                    local += full_word_count(opts_.max_len - 2);
                word.pop_back();
            }
            word.pop_back();
        }
        checked_.fetch_add(local);

        std::atomic<size_t> next{0};
        auto worker = [&]() {
            uint64_t mine = 0;
            for (;;) {
                size_t idx = next.fetch_add(1);
                if (idx >= jobs.size()) break;
                Job& job = jobs[idx];
                for (Letter u : order_) {
                    if (cancel_.load(std::memory_order_relaxed)) break;
                    job.word.push_back(u);
                    RMatrix<S> child = job.prefix * letter(u);
                    visit(child, job.word, mine);
                    job.word.pop_back();
                }
            }
            checked_.fetch_add(mine);
        };
        int nthreads = std::min<int>(opts_.threads, static_cast<int>(jobs.size()));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // like visit() but never recurses (the node's subtree is handled elsewhere)
    void visit_shallow(const RMatrix<S>& p, std::vector<Letter>& word, uint64_t& local_checked) {
        if (static_cast<int>(word.size()) > opts_.max_len) return;
        if (cancel_.load(std::memory_order_relaxed)) return;
        ++local_checked;
        S tr = word_trace(p);
        if (opts_.collect_traces) {
            std::lock_guard<std::mutex> lock(mu_);
            collected_.push_back({WordId{word}, tr});
        }
        if (!ScalarOps<S>::is_zero(tr)) record_witness(word, std::move(tr));
    }

    const RMatrix<S>& a_;
    const RMatrix<S>& b_;
    RMatrix<S> c_;
    STOptions opts_;
    Letter order_[2] = {Letter::A, Letter::B};
    std::vector<std::pair<int, int>> c_entries_;
    std::atomic<bool> cancel_{false};
    std::atomic<uint64_t> checked_{0};
    std::mutex mu_;
    std::optional<STWitness<S>> witness_;
    std::vector<STWitness<S>> collected_;
};

template <>
inline STMode StEngine<GaussianRational>::mode_tag() const { return STMode::Exact; }
template <>
inline STMode StEngine<MPoly>::mode_tag() const { return STMode::Symbolic; }

}  // namespace detail

/// Finite simultaneous-triangularization test: ST iff trace(U_1...U_k (AB-BA))
/// vanishes for every word with k in [1, max_len], default max_len = n^2 - 1.
template <class S>
STReport<S> st_test(const RMatrix<S>& a, const RMatrix<S>& b, STOptions opts = {}) {
    a.require_square("st_test");
    a.require_same_shape(b, "st_test");
    detail::StEngine<S> engine(a, b, opts);
    return engine.run();
}

/// Symbolic variant: the ST verdict covers every member of the family at once.
/// Raises SymbolicBlowup when the term ceiling is exceeded; callers fall back
/// to randomized_st_family.
STReport<MPoly> st_test_symbolic(const QMatrix& a, const PolyMatrix& b_sym, STOptions opts = {});

/// Polynomial-identity-testing fallback: exact st_test on `trials` sampled
/// members of ker(phi). Each verdict is exact for its instance.
std::vector<STReport<GaussianRational>> randomized_st_family(const QMatrix& a,
                                                             const SylvesterReport& report,
                                                             int trials, uint64_t seed,
                                                             STOptions opts = {});

}  // namespace stc

#endif
