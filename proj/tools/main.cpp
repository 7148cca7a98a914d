#include <iostream>

#include "sea/cli.hpp"

int main(int argc, char** argv)
{
    return sea::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
