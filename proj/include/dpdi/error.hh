#ifndef DPDI_ERROR_HH
#define DPDI_ERROR_HH

#include <stdexcept>
#include <string>

namespace dpdi
{
    /// Base class for everything the library throws on bad input.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class InvalidDigraph : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidCover : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// Malformed digraph, cover or transversal file. Carries the 1-based line.
    class FormatError : public Error
    {
    public:
        FormatError(int line, const std::string & what) :
            Error("line " + std::to_string(line) + ": " + what),
            _line(line)
        {
        }

        auto line() const -> int { return _line; }

    private:
        int _line;
    };

    enum class ShiftFailure
    {
        Undefined,
        Ambiguous
    };

    class ShiftError : public Error
    {
    public:
        ShiftError(ShiftFailure kind, const std::string & what) :
            Error(what),
            _kind(kind)
        {
        }

        auto kind() const -> ShiftFailure { return _kind; }

    private:
        ShiftFailure _kind;
    };
}

#endif
