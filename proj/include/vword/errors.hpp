#pragma once

#include <stdexcept>
#include <string>

namespace vword {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// apply() was asked for the image of a word that lies strictly above the
/// domain barrier; the image is a union of cones, not a single address.
struct InsufficientDepth : Error {
    using Error::Error;
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& name)
        : Error("unknown generator: " + name), generator(name) {}
    std::string generator;
};

struct ParseError : Error {
    using Error::Error;
};

/// PDA builder: a generator's table cannot read the whole node address from
/// the stack (no domain word is a prefix of the node).
struct ShallowNode : Error {
    explicit ShallowNode(const std::string& name, const std::string& detail)
        : Error("node too shallow for generator " + name + ": " + detail), generator(name) {}
    std::string generator;
};

/// PDA builder: a generator maps the node into a cone comparable with the
/// node's own cone, so the node cannot serve as a demonstration node.
struct NodeNotMoved : Error {
    explicit NodeNotMoved(const std::string& name, const std::string& detail)
        : Error("generator " + name + " does not move the node off itself: " + detail),
          generator(name) {}
    std::string generator;
};

/// determinize: conflict splitting exceeded its depth bound.
struct NonTerminatingRefinement : Error {
    using Error::Error;
};

}  // namespace vword
