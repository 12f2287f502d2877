#include "orbitkit/enumerate.hpp"

namespace orbitkit {

namespace {

void rec(int remaining, int max_part, std::vector<int>& stack,
         const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(stack));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        rec(remaining - part, part, stack, visit);
        stack.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0)
        return;
    std::vector<int> stack;
    rec(n, n == 0 ? 1 : n, stack, visit);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_of_type(int n, ClassicalType x) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (is_type(p, x))
            out.push_back(p);
    });
    return out;
}

} // namespace orbitkit
