#include <dpdi/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return dpdi::cli_main({argv + 1, argv + argc}, std::cout, std::cerr);
}
