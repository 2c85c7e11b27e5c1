#include <iostream>

#include "nhlc/cli.hpp"

int main(int argc, char** argv)
{
    return nhlc::run_cli(argc, argv, std::cout, std::cerr);
}
