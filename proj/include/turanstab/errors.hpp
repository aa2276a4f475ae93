#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turanstab {

/// Malformed caller input: bad vertex labels, invalid partitions, unparsable files.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search was asked to run past its configured size guard.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition failed; carries the refuting clique when one is known.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, std::vector<int> witness)
        : std::runtime_error(what), clique_witness(std::move(witness)) {}

    std::vector<int> clique_witness;
};

}  // namespace turanstab
