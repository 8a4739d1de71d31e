#include "binderlab/report.hpp"

namespace binderlab::golden {

const char* const kLagrangiansJ2[15][4] = {
    {"0000", "0010", "1000", "1010"},
    {"0000", "0011", "1100", "1111"},
    {"0000", "0111", "1001", "1110"},
    {"0000", "0110", "1011", "1101"},
    {"0000", "0001", "0100", "0101"},
    {"0000", "0001", "1000", "1001"},
    {"0000", "0001", "1100", "1101"},
    {"0000", "0010", "0100", "0110"},
    {"0000", "0010", "1100", "1110"},
    {"0000", "0011", "0100", "0111"},
    {"0000", "0011", "1000", "1011"},
    {"0000", "0101", "1010", "1111"},
    {"0000", "0101", "1011", "1110"},
    {"0000", "0110", "1001", "1111"},
    {"0000", "0111", "1010", "1101"},
};

const char* const kTremainJ3Extensions[8][4] = {
    {"000001", "000010", "110111", "111011"},
    {"000001", "010010", "100010", "111110"},
    {"000010", "010001", "100001", "111101"},
    {"000100", "001000", "111101", "111110"},
    {"000100", "011000", "101000", "111011"},
    {"001000", "010100", "100100", "110111"},
    {"010001", "010010", "100100", "101000"},
    {"010100", "011000", "100001", "100010"},
};

const char* const kTremainJ4Blocks[64][10] = {
    {"00000000", "00000001", "00000010", "00011111", "00101111", "01110011", "10110011", "11000111", "11001011", "11111111"},
    {"00000000", "00000001", "00000010", "00110111", "00111011", "01001111", "10001111", "11010011", "11100011", "11111111"},
    {"00000000", "00000001", "00010110", "00011010", "00101111", "01100010", "10100010", "11001110", "11010011", "11111111"},
    {"00000000", "00000001", "00010110", "00100110", "00111011", "01001010", "10001010", "11000111", "11110010", "11111111"},
    {"00000000", "00000001", "00011010", "00101010", "00110111", "01000110", "10000110", "11001011", "11110010", "11111111"},
    {"00000000", "00000001", "00011111", "00100110", "00101010", "01010010", "10010010", "11001110", "11100011", "11111111"},
    {"00000000", "00000001", "00111110", "01000110", "01001010", "01110011", "10001111", "10010010", "10100010", "11111111"},
    {"00000000", "00000001", "00111110", "01001111", "01010010", "01100010", "10000110", "10001010", "10110011", "11111111"},
    {"00000000", "00000010", "00010101", "00011001", "00101111", "01100001", "10100001", "11001101", "11010011", "11111111"},
    {"00000000", "00000010", "00010101", "00100101", "00111011", "01001001", "10001001", "11000111", "11110001", "11111111"},
    {"00000000", "00000010", "00011001", "00101001", "00110111", "01000101", "10000101", "11001011", "11110001", "11111111"},
    {"00000000", "00000010", "00011111", "00100101", "00101001", "01010001", "10010001", "11001101", "11100011", "11111111"},
    {"00000000", "00000010", "00111101", "01000101", "01001001", "01110011", "10001111", "10010001", "10100001", "11111111"},
    {"00000000", "00000010", "00111101", "01001111", "01010001", "01100001", "10000101", "10001001", "10110011", "11111111"},
    {"00000000", "00000100", "00001000", "00011111", "00101111", "01111100", "10111100", "11001101", "11001110", "11111111"},
    {"00000000", "00000100", "00001000", "00111101", "00111110", "01001111", "10001111", "11011100", "11101100", "11111111"},
    {"00000000", "00000100", "00011001", "00011010", "00101111", "01101000", "10101000", "11001011", "11011100", "11111111"},
    {"00000000", "00000100", "00011001", "00101001", "00111110", "01001010", "10001010", "11001101", "11111000", "11111111"},
    {"00000000", "00000100", "00011010", "00101010", "00111101", "01001001", "10001001", "11001110", "11111000", "11111111"},
    {"00000000", "00000100", "00011111", "00101001", "00101010", "01011000", "10011000", "11001011", "11101100", "11111111"},
    {"00000000", "00000100", "00111011", "01001001", "01001010", "01111100", "10001111", "10011000", "10101000", "11111111"},
    {"00000000", "00000100", "00111011", "01001111", "01011000", "01101000", "10001001", "10001010", "10111100", "11111111"},
    {"00000000", "00001000", "00010101", "00010110", "00101111", "01100100", "10100100", "11000111", "11011100", "11111111"},
    {"00000000", "00001000", "00010101", "00100101", "00111110", "01000110", "10000110", "11001101", "11110100", "11111111"},
    {"00000000", "00001000", "00010110", "00100110", "00111101", "01000101", "10000101", "11001110", "11110100", "11111111"},
    {"00000000", "00001000", "00011111", "00100101", "00100110", "01010100", "10010100", "11000111", "11101100", "11111111"},
    {"00000000", "00001000", "00110111", "01000101", "01000110", "01111100", "10001111", "10010100", "10100100", "11111111"},
    {"00000000", "00001000", "00110111", "01001111", "01010100", "01100100", "10000101", "10000110", "10111100", "11111111"},
    {"00000000", "00010000", "00100000", "00110111", "00111011", "01111100", "10111100", "11110001", "11110010", "11111111"},
    {"00000000", "00010000", "00100000", "00111101", "00111110", "01110011", "10110011", "11110100", "11111000", "11111111"},
    {"00000000", "00010000", "00100101", "00100110", "00111011", "01101000", "10101000", "11100011", "11110100", "11111111"},
    {"00000000", "00010000", "00100101", "00101001", "00111110", "01100010", "10100010", "11101100", "11110001", "11111111"},
    {"00000000", "00010000", "00100110", "00101010", "00111101", "01100001", "10100001", "11101100", "11110010", "11111111"},
    {"00000000", "00010000", "00101001", "00101010", "00110111", "01100100", "10100100", "11100011", "11111000", "11111111"},
    {"00000000", "00010000", "00101111", "01100001", "01100010", "01111100", "10100100", "10101000", "10110011", "11111111"},
    {"00000000", "00010000", "00101111", "01100100", "01101000", "01110011", "10100001", "10100010", "10111100", "11111111"},
    {"00000000", "00010101", "00010110", "00100000", "00111011", "01011000", "10011000", "11010011", "11110100", "11111111"},
    {"00000000", "00010101", "00011001", "00100000", "00111110", "01010010", "10010010", "11011100", "11110001", "11111111"},
    {"00000000", "00010101", "00101010", "01000110", "01011000", "01100001", "10001001", "10010010", "10100100", "11111111"},
    {"00000000", "00010101", "00101010", "01001001", "01010010", "01100100", "10000110", "10011000", "10100001", "11111111"},
    {"00000000", "00010110", "00011010", "00100000", "00111101", "01010001", "10010001", "11011100", "11110010", "11111111"},
    {"00000000", "00010110", "00101001", "01000101", "01011000", "01100010", "10001010", "10010001", "10100100", "11111111"},
    {"00000000", "00010110", "00101001", "01001010", "01010001", "01100100", "10000101", "10011000", "10100010", "11111111"},
    {"00000000", "00011001", "00011010", "00100000", "00110111", "01010100", "10010100", "11010011", "11111000", "11111111"},
    {"00000000", "00011001", "00100110", "01000101", "01010010", "01101000", "10001010", "10010100", "10100001", "11111111"},
    {"00000000", "00011001", "00100110", "01001010", "01010100", "01100001", "10000101", "10010010", "10101000", "11111111"},
    {"00000000", "00011010", "00100101", "01000110", "01010001", "01101000", "10001001", "10010100", "10100010", "11111111"},
    {"00000000", "00011010", "00100101", "01001001", "01010100", "01100010", "10000110", "10010001", "10101000", "11111111"},
    {"00000000", "00011111", "00100000", "01010001", "01010010", "01111100", "10010100", "10011000", "10110011", "11111111"},
    {"00000000", "00011111", "00100000", "01010100", "01011000", "01110011", "10010001", "10010010", "10111100", "11111111"},
    {"00000000", "01000000", "10000000", "11000111", "11001011", "11011100", "11101100", "11110001", "11110010", "11111111"},
    {"00000000", "01000000", "10000000", "11001101", "11001110", "11010011", "11100011", "11110100", "11111000", "11111111"},
    {"00000000", "01000000", "10000101", "10000110", "10011000", "10101000", "10110011", "11001011", "11110100", "11111111"},
    {"00000000", "01000000", "10000101", "10001001", "10010010", "10100010", "10111100", "11001110", "11110001", "11111111"},
    {"00000000", "01000000", "10000110", "10001010", "10010001", "10100001", "10111100", "11001101", "11110010", "11111111"},
    {"00000000", "01000000", "10001001", "10001010", "10010100", "10100100", "10110011", "11000111", "11111000", "11111111"},
    {"00000000", "01000000", "10001111", "10010001", "10010010", "10100100", "10101000", "11011100", "11100011", "11111111"},
    {"00000000", "01000000", "10001111", "10010100", "10011000", "10100001", "10100010", "11010011", "11101100", "11111111"},
    {"00000000", "01000101", "01000110", "01011000", "01101000", "01110011", "10000000", "11001011", "11110100", "11111111"},
    {"00000000", "01000101", "01001001", "01010010", "01100010", "01111100", "10000000", "11001110", "11110001", "11111111"},
    {"00000000", "01000110", "01001010", "01010001", "01100001", "01111100", "10000000", "11001101", "11110010", "11111111"},
    {"00000000", "01001001", "01001010", "01010100", "01100100", "01110011", "10000000", "11000111", "11111000", "11111111"},
    {"00000000", "01001111", "01010001", "01010010", "01100100", "01101000", "10000000", "11011100", "11100011", "11111111"},
    {"00000000", "01001111", "01010100", "01011000", "01100001", "01100010", "10000000", "11010011", "11101100", "11111111"},
};

}  // namespace binderlab::golden
