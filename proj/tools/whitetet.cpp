#include <iostream>
#include <string>
#include <vector>

#include "whitetet/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return whitetet::run_cli(args, std::cout, std::cerr);
}
