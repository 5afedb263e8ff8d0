#include <blockcount/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return blockcount::cli::run(std::move(args));
}
