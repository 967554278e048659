// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace earlyadd {

class EmptyProfile : public std::invalid_argument {
public:
    EmptyProfile() : std::invalid_argument("delay profile must contain at least one entry") {}
};

class NegativeArrival : public std::invalid_argument {
public:
    explicit NegativeArrival(int index)
        : std::invalid_argument("negative arrival time at bit " + std::to_string(index)),
          index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NetlistError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NothingToRelease : public std::logic_error {
public:
    NothingToRelease() : std::logic_error("all live terms are already released") {}
};

class IncompleteTrace : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class WidthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class WidthTooLargeForExhaustive : public std::invalid_argument {
public:
    explicit WidthTooLargeForExhaustive(int width)
        : std::invalid_argument("exhaustive verification supports width <= 12, got " +
                                std::to_string(width)) {}
};

class UnknownAlgorithm : public std::invalid_argument {
public:
    explicit UnknownAlgorithm(const std::string& name)
        : std::invalid_argument("unknown algorithm: " + name) {}
};

class UnknownKind : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace earlyadd
