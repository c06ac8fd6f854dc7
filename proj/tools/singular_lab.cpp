#include <iostream>
#include <string>
#include <vector>

#include <singular_lab/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return singular_lab::cli::run(args, std::cout, std::cerr);
}
