#ifndef MMQ_VERIFY_HPP
#define MMQ_VERIFY_HPP

#include <string>
#include <vector>

#include "mmq/delta.hpp"
#include "mmq/matroid.hpp"
#include "mmq/multimatroid.hpp"
#include "mmq/ribbon.hpp"

namespace mmq {

struct Check {
    std::string name;
    bool pass = true;
    std::vector<std::string> witnesses; // failure details

    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    void fail(std::string witness)
    {
        pass = false;
        witnesses.push_back(std::move(witness));
    }
};

// Executable forms of the structural theorems, one Check per statement.
// Every suite is exhaustive over the object it is given (desk scale).
std::vector<Check> verify_multimatroid(const Multimatroid& z, const SkewClassOrdering& ord);
std::vector<Check> verify_matroid(const Matroid& m, const ElementOrder& ord);
std::vector<Check> verify_delta(const DeltaMatroid& d, const ElementOrder& ord);
std::vector<Check> verify_ribbon(const RibbonGraph& g, const EdgeOrder& ord);

bool all_pass(const std::vector<Check>& checks);

} // namespace mmq

#endif
