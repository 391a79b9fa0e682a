#include <iostream>
#include <string>
#include <vector>

#include "crystal/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return crystal::cli::run(std::move(args), std::cout, std::cerr);
}
