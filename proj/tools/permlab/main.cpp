#include <iostream>

#include "permlab/cli.hpp"

int main(int argc, char** argv)
{
    return permlab::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
