#ifndef HAMSPAN_ERRORS_HPP
#define HAMSPAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamspan {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected edge in an input edge list; index() is the position of the pair.
class InvalidEdgeError : public Error {
public:
    enum class Reason { OutOfRange, SelfLoop, Duplicate };

    InvalidEdgeError(std::size_t index, Reason reason, const std::string& what)
        : Error(what), index_(index), reason_(reason) {}

    std::size_t index() const { return index_; }
    Reason reason() const { return reason_; }

private:
    std::size_t index_;
    Reason reason_;
};

class EmptyGraphError : public Error {
public:
    using Error::Error;
};

class EdgeExistsError : public Error {
public:
    using Error::Error;
};

class EdgeMissingError : public Error {
public:
    using Error::Error;
};

class VertexError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Input exceeds a documented size bound (vertex cap, circuit-count cap, ...).
class CapacityError : public Error {
public:
    using Error::Error;
};

// Operation is not meaningful for this input (e.g. laceability of a non-bipartite graph).
class InapplicableError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class WidthMismatchError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class NotInSpanError : public Error {
public:
    using Error::Error;
};

class CircuitError : public Error {
public:
    using Error::Error;
};

} // namespace hamspan

#endif // HAMSPAN_ERRORS_HPP
