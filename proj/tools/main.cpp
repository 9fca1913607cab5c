#include "cli.hpp"

int main(int argc, char** argv) { return incompat::cli::run(argc, argv); }
