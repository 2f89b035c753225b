#include "mddim/cli.hpp"

int main(int argc, char** argv) { return mddim::cli::main(argc, argv); }
