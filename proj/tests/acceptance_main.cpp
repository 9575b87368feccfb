#include "charvar/acceptance.hpp"

#include <iostream>

int main() {
    int failed = 0;
    for (int id = 1; id <= charvar::kCriterionCount; ++id) {
        const auto res = charvar::run_criterion(id, 1);
        std::cout << charvar::format_line(res) << std::endl;
        if (!res.pass) ++failed;
    }
    std::cout << (charvar::kCriterionCount - failed) << "/" << charvar::kCriterionCount << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
