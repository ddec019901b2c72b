#include "tripstern/cli_app.hpp"

int main(int argc, char** argv) { return tripstern::cli::run(argc, argv, std::cout, std::cerr); }
