#include "frieze/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace frieze {

EnumerationTask::EnumerationTask(Domain domain, std::vector<RingElement> candidates, size_t length,
                                 std::optional<int> lambda_filter, bool dedup)
    : domain_(std::move(domain)), length_(length), lambda_filter_(lambda_filter), dedup_(dedup) {
    if (length_ < 2)
        throw LengthError("enumeration length must be >= 2");
    if (candidates.empty())
        throw RangeError("candidate set must be nonempty");
    if (lambda_filter_ && *lambda_filter_ != 1 && *lambda_filter_ != -1)
        throw RangeError("lambda filter must be +1 or -1");
    for (const auto& c : candidates) {
        if (c.domain() != domain_)
            throw DomainError("candidate outside the task domain");
        if (std::find(candidates_.begin(), candidates_.end(), c) == candidates_.end())
            candidates_.push_back(c);
    }
}

namespace {

constexpr std::uint64_t kProgressStride = 1 << 16;

struct Searcher {
    const EnumerationTask& task;
    const std::function<void(const QuiddityCycle&)>& sink;
    EnumerationStats& stats;
    const std::function<void(const EnumerationStats&)>& progress;

    const RingElement one;
    const RingElement minus_one;
    const bool sign_collapse;

    std::vector<RingElement> prefix;
    std::vector<Matrix2> products; // products[t] = eta product of prefix[0..t)

    Searcher(const EnumerationTask& t, const std::function<void(const QuiddityCycle&)>& s,
             EnumerationStats& st, const std::function<void(const EnumerationStats&)>& pr)
        : task(t), sink(s), stats(st), progress(pr),
          one(RingElement::one(t.domain())), minus_one(-RingElement::one(t.domain())),
          sign_collapse(one == minus_one) {
        prefix.reserve(t.length());
        products.reserve(t.length());
        products.push_back(Matrix2::identity(t.domain()));
    }

    void tick() {
        ++stats.nodes_visited;
        if (progress && stats.nodes_visited % kProgressStride == 0) progress(stats);
    }

    void push(const RingElement& c) {
        prefix.push_back(c);
        products.push_back(products.back() * eta(c));
    }

    void pop() {
        prefix.pop_back();
        products.pop_back();
    }

    void run(size_t depth) {
        if (depth + 1 == task.length()) {
            solve_last();
            return;
        }
        for (const auto& c : task.candidates()) {
            tick();
            push(c);
            run(depth + 1);
            pop();
        }
    }

    // The first m-1 entries pin the last one: the full product closes to
    // lambda*Id iff P = [[0, lambda], [-lambda, s]] and c_m = lambda*s.
    void solve_last() {
        tick();
        const Matrix2& p = products.back();
        if (!p.a11().is_zero()) return;
        for (int lambda : {+1, -1}) {
            if (lambda == -1 && sign_collapse) break;
            if (task.lambda_filter() && *task.lambda_filter() != lambda) continue;
            const RingElement& lam = lambda > 0 ? one : minus_one;
            if (p.a12() != lam || p.a21() != -lam) continue;
            RingElement last = lam * p.a22();
            if (std::find(task.candidates().begin(), task.candidates().end(), last) ==
                task.candidates().end())
                continue;
            prefix.push_back(last);
            emit(lambda);
            prefix.pop_back();
        }
    }

    void emit(int lambda) {
        if (task.dedup() && prefix != canonical_entries(prefix)) return;
        QuiddityCycle cycle{prefix};
        if (cycle.lambda() != lambda)
            throw Error("internal: enumerated cycle closes with the wrong sign");
        ++stats.cycles_found;
        sink(cycle);
    }
};

} // namespace

void enumerate_cycles(const EnumerationTask& task,
                      const std::function<void(const QuiddityCycle&)>& sink,
                      EnumerationStats* stats,
                      const std::function<void(const EnumerationStats&)>& progress) {
    EnumerationStats local;
    Searcher searcher(task, sink, stats ? *stats : local, progress);
    searcher.run(0);
}

std::vector<QuiddityCycle> enumerate_all(const EnumerationTask& task, unsigned jobs,
                                         EnumerationStats* stats) {
    const size_t fanout = task.candidates().size();
    if (jobs <= 1 || fanout < 2 || task.length() < 3) {
        std::vector<QuiddityCycle> out;
        enumerate_cycles(task, [&](const QuiddityCycle& c) { out.push_back(c); }, stats);
        return out;
    }

    // Partition by first entry; merge buckets in candidate order so the
    // output is identical for every worker count.
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(fanout));
    std::vector<std::vector<QuiddityCycle>> buckets(fanout);
    std::vector<EnumerationStats> worker_stats(fanout);
    std::atomic<size_t> next{0};

    auto work = [&]() {
        for (size_t f = next.fetch_add(1); f < fanout; f = next.fetch_add(1)) {
            auto& bucket = buckets[f];
            std::function<void(const QuiddityCycle&)> sink =
                [&bucket](const QuiddityCycle& c) { bucket.push_back(c); };
            Searcher searcher(task, sink, worker_stats[f], {});
            searcher.tick();
            searcher.push(task.candidates()[f]);
            searcher.run(1);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    std::vector<QuiddityCycle> out;
    for (size_t f = 0; f < fanout; ++f) {
        for (auto& c : buckets[f]) out.push_back(std::move(c));
        if (stats) {
            stats->nodes_visited += worker_stats[f].nodes_visited;
            stats->cycles_found += worker_stats[f].cycles_found;
        }
    }
    return out;
}

ClassificationReport classify(const EnumerationTask& task, const SubsetSpec& subset,
                              unsigned jobs) {
    if (task.length() < 3)
        throw LengthError("classification needs length >= 3 (reducibility is undefined below)");
    if (task.domain() != subset.domain())
        throw DomainError("subset domain differs from the task domain");
    for (const auto& c : task.candidates())
        if (!is_member(subset, c))
            throw MembershipError("candidate " + c.str() + " is outside the subset " +
                                  subset.str());

    EnumerationTask orbit_task(task.domain(), task.candidates(), task.length(),
                               task.lambda_filter(), /*dedup=*/true);
    std::vector<QuiddityCycle> orbits = enumerate_all(orbit_task, jobs);

    ClassificationReport report{task, subset, orbits.size(), {}, 0};
    for (const auto& orbit : orbits) {
        if (is_reducible(orbit, subset))
            ++report.reducible_count;
        else
            report.irreducible_orbits.push_back(orbit);
    }
    return report;
}

QuiddityCycle gauss_family(unsigned long k) {
    if (k < 1)
        throw RangeError("gauss_family needs k >= 1");
    auto g = [](long re, long im) { return RingElement::gaussian(re, im); };
    std::vector<RingElement> entries;
    entries.reserve(4 * k + 6);
    entries.push_back(g(0, 2));   // 2i
    entries.push_back(g(1, -1));  // -i+1
    for (unsigned long t = 0; t < 2 * k; ++t) entries.push_back(g(2, 0));
    entries.push_back(g(1, 1));   // i+1
    entries.push_back(g(0, -2));  // -2i
    entries.push_back(g(-1, 1));  // i-1
    for (unsigned long t = 0; t < 2 * k; ++t) entries.push_back(g(-2, 0));
    entries.push_back(g(-1, -1)); // -i-1
    return QuiddityCycle(std::move(entries));
}

GaussFamilyReport verify_gauss_irreducible(unsigned long k) {
    QuiddityCycle cycle = gauss_family(k);
    FriezePattern f = make_frieze(cycle);
    std::vector<FriezeEntry> entries = frieze_entries(f);
    bool irreducible = std::none_of(entries.begin(), entries.end(),
                                    [](const FriezeEntry& e) { return is_pm_one(e.value).has_value(); });
    return GaussFamilyReport{std::move(cycle), irreducible, std::move(entries)};
}

} // namespace frieze
