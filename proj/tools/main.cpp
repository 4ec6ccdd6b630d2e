#include "cli.hpp"

int main(int argc, char ** argv)
{
    return nmg::cli::run(argc, argv, std::cout, std::cerr);
}
