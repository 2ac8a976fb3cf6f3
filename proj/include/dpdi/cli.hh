#ifndef DPDI_CLI_HH
#define DPDI_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace dpdi
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int disagreement = 1;
        inline constexpr int usage = 2;
        inline constexpr int budget = 3;
    }

    /// args excludes the program name.
    auto cli_main(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
