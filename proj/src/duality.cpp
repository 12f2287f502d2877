#include "orbitkit/duality.hpp"

#include <atomic>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "orbitkit/enumerate.hpp"

namespace orbitkit {

ClassicalType dual_type(ClassicalType x) {
    switch (x) {
    case ClassicalType::A: return ClassicalType::A;
    case ClassicalType::B: return ClassicalType::C;
    case ClassicalType::C: return ClassicalType::B;
    case ClassicalType::D: return ClassicalType::D;
    }
    return ClassicalType::A;
}

namespace {

void require_type(const Partition& p, ClassicalType x, const char* where) {
    if (!is_type(p, x))
        throw TypeMismatch(std::string(where) + ": " + to_string(p) + " is not of type " +
                           type_letter(x));
}

void require_bcd(ClassicalType x, const char* where) {
    if (x == ClassicalType::A)
        throw TypeMismatch(std::string(where) + ": type must be B, C or D");
}

} // namespace

Partition dbv(const Partition& p, ClassicalType x) {
    require_type(p, x, "dbv");
    Partition result;
    switch (x) {
    case ClassicalType::A:
        result = transpose(p);
        break;
    case ClassicalType::B:
        result = transpose(collapse(minus_one(p), ClassicalType::C));
        break;
    case ClassicalType::C:
        result = transpose(collapse(plus_one(p), ClassicalType::B));
        break;
    case ClassicalType::D:
        result = collapse(transpose(p), ClassicalType::D);
        break;
    }
    if (!is_type(result, dual_type(x)))
        throw std::logic_error("dbv(" + to_string(p) + ", " + type_letter(x) +
                               ") produced " + to_string(result) +
                               ", not of the dual type");
    return result;
}

Partition key_lemma_lhs(const Partition& p, ClassicalType x, int b, int d) {
    require_bcd(x, "key_lemma_lhs");
    require_type(p, x, "key_lemma_lhs");
    return dbv(p | rectangle(b, 2 * d), x);
}

Partition key_lemma_rhs(const Partition& p, ClassicalType x, int b, int d) {
    require_bcd(x, "key_lemma_rhs");
    require_type(p, x, "key_lemma_rhs");
    return collapse(rectangle(2 * d, b) + dbv(p, x), dual_type(x));
}

Partition lhs_direct(const Partition& p, ClassicalType x, int b, int d) {
    Partition u = p | rectangle(b, 2 * d);
    switch (x) {
    case ClassicalType::B:
        return collapse(minus_one(u), ClassicalType::C);
    case ClassicalType::C:
        return collapse(plus_one(u), ClassicalType::B);
    case ClassicalType::D:
        return collapse(minus_one(plus_one(u)), ClassicalType::C);
    case ClassicalType::A:
        break;
    }
    throw TypeMismatch("lhs_direct: type must be B, C or D");
}

LhsCaseReport lhs_case_formula(const Partition& p, ClassicalType x, int b, int d) {
    require_bcd(x, "lhs_case_formula");
    require_type(p, x, "lhs_case_formula");

    Partition above = slice(p, Cmp::gt, b);
    bool cond_a = false, cond_b = false;
    Partition inner;
    switch (x) {
    case ClassicalType::B:
        cond_a = b % 2 != 0;
        cond_b = above.sum() % 2 != 0;
        inner = collapse(minus_one(p), ClassicalType::C);
        break;
    case ClassicalType::C:
        cond_a = b % 2 == 0;
        cond_b = (above.length() + above.sum()) % 2 == 0;
        inner = collapse(plus_one(p), ClassicalType::B);
        break;
    case ClassicalType::D:
        cond_a = b % 2 != 0;
        cond_b = above.sum() % 2 == 0;
        inner = collapse(minus_one(plus_one(p)), ClassicalType::C);
        break;
    case ClassicalType::A:
        break;
    }
    bool cond_c = slice(p, Cmp::eq, b).empty();
    bool exceptional = cond_a && cond_b && cond_c;

    Partition tail = exceptional
        ? Partition{b + 1} | rectangle(b, 2 * d - 2) | Partition{b - 1}
        : rectangle(b, 2 * d);
    return LhsCaseReport{exceptional, cond_a, cond_b, cond_c, inner | tail};
}

bool strict_inequality_check(const Partition& p, const Partition& q, ClassicalType x,
                             int b, int d) {
    require_bcd(x, "strict_inequality_check");
    require_type(p, x, "strict_inequality_check");
    require_type(q, x, "strict_inequality_check");
    if (p.sum() != q.sum())
        throw PreconditionViolated("strict_inequality_check: |p| != |q|");
    if (!dominates(p, q))
        throw PreconditionViolated("strict_inequality_check: p >= q fails");
    if (!strictly_dominates(dbv(q, x), dbv(p, x)))
        throw PreconditionViolated("strict_inequality_check: dbv(p) < dbv(q) fails");
    Partition rect = rectangle(b, 2 * d);
    return strictly_dominates(dbv(q | rect, x), dbv(p | rect, x));
}

SweepSummary key_lemma_sweep(int max_size, int max_b, int max_d, int jobs) {
    struct Cell {
        ClassicalType x;
        Partition p;
        int b;
        int d;
    };
    std::vector<Cell> cells;
    for (ClassicalType x : {ClassicalType::B, ClassicalType::C, ClassicalType::D}) {
        for (int n = 1; n <= max_size; ++n) {
            if ((n % 2 != 0) != (x == ClassicalType::B))
                continue;
            for (const Partition& p : partitions_of_type(n, x))
                for (int b = 1; b <= max_b; ++b)
                    for (int d = 1; d <= max_d; ++d)
                        cells.push_back({x, p, b, d});
        }
    }

    struct Found {
        std::size_t index;
        SweepCounterexample ce;
    };
    std::vector<std::vector<Found>> found_per_worker;
    jobs = std::max(1, jobs);
    found_per_worker.resize(static_cast<std::size_t>(jobs));

    std::atomic<std::size_t> next{0};
    auto work = [&](int worker) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size())
                return;
            const Cell& c = cells[i];
            Partition lhs = key_lemma_lhs(c.p, c.x, c.b, c.d);
            Partition rhs = key_lemma_rhs(c.p, c.x, c.b, c.d);
            if (lhs != rhs)
                found_per_worker[static_cast<std::size_t>(worker)].push_back(
                    {i, {c.x, c.p, c.b, c.d, lhs, rhs, "key_lemma"}});
            Partition direct = lhs_direct(c.p, c.x, c.b, c.d);
            Partition formula = lhs_case_formula(c.p, c.x, c.b, c.d).result;
            if (direct != formula)
                found_per_worker[static_cast<std::size_t>(worker)].push_back(
                    {i, {c.x, c.p, c.b, c.d, direct, formula, "case_formula"}});
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    std::vector<Found> all;
    for (auto& v : found_per_worker)
        all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) {
        return a.index < b.index ||
               (a.index == b.index && std::string_view(a.ce.kind) < b.ce.kind);
    });

    SweepSummary summary;
    summary.cases_checked = static_cast<std::int64_t>(cells.size());
    for (auto& f : all)
        summary.counterexamples.push_back(f.ce);
    return summary;
}

} // namespace orbitkit
