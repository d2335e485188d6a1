#pragma once

#include <stdexcept>
#include <string>

namespace tribracket {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    // Process exit code used by the command-line front end.
    virtual int exit_code() const { return 2; }
};

class NonUnit : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class NotQuasigroup : public Error {
public:
    using Error::Error;
};

class NotAGroup : public Error {
public:
    using Error::Error;
};

class NotConstant : public Error {
public:
    using Error::Error;
};

class InvalidBracket : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

}  // namespace tribracket
