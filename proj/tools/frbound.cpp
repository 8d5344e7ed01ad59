#include "frb/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return frb::run_cli(argc, argv, std::cout, std::cerr);
}
