#include "polarcut/cli.hpp"

int main(int argc, char** argv) { return polarcut::cli::run(argc, argv); }
