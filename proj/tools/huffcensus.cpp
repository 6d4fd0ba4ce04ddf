#include <iostream>

int main() {
    std::cout << "huffcensus (cli wiring pending)\n";
    return 0;
}
