#include "mdsgrid/cli/app.hpp"

int main(int argc, char** argv) { return mdsgrid::cli::run(argc, argv); }
