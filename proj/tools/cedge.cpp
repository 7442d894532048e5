#include <iostream>

#include "cedge/cli.hpp"

int main(int argc, char** argv)
{
    auto outcome = cedge::run(argc, argv);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.exit_code;
}
