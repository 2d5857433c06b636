#include "ask/cli.hpp"

int main(int argc, char** argv) { return ask::cli::run(argc, argv); }
