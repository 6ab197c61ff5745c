#include "banbury/reference_data.hpp"

namespace banbury::reference {

LetterCounts english_1000_counts() {
    //       A   B   C   D    E   F   G   H   I  J  K   L   M   N   O   P  Q   R   S   T   U   V   W   X   Y  Z
    return {84, 23, 21, 46, 116, 20, 25, 49, 76, 2, 5, 38, 34, 66, 66, 15, 2, 64, 73, 81, 19, 11, 21, 16, 24, 3};
}

std::string_view vigenere_cipher_as_printed() {
    return "DKQHSHZNMP"
           "RCVXUHTEAQ"
           "XHPUEPPSBK"
           "TWUJAGDYOJ"
           "THWCYDZHGA"
           "PZKOXOEYAE"
           "BOKBUBPIKR"
           "WWACEJPHLP"
           "TUZYFHLRYC";
}

std::string_view vigenere_cipher() {
    return "DKQHSHZMNP"
           "RCVXUHTEAQ"
           "XHPUEPPSBK"
           "TWUJAGDYOJ"
           "THWCYDZHGA"
           "PZKOXOEYAE"
           "BOKBUBPIKR"
           "WWACEJPHLP"
           "TUZYFHLRYC";
}

std::string_view vigenere_key() { return "POIUMOLQNY"; }

std::string_view vigenere_clear() {
    return "OWINGTOWARCONDITIONSITHASBECOMEIMPOSSIBLETOIMPORTCALCULATINGMACHINESXTHISISVERYREGRETTABLE";
}

std::array<int, kAlphabetSize> tabulated_slide_scores() {
    // Symmetric: slide s and slide 27 - s (mod 26) share a row.
    std::array<int, kAlphabetSize> s{};
    const int rows[13][3] = {{1, 0, -20}, {2, 25, -16}, {3, 24, -12}, {4, 23, -8}, {5, 22, -6},
                             {6, 21, -3}, {7, 20, -1},  {8, 19, 1},   {9, 18, 3},  {10, 17, 4},
                             {11, 16, 5}, {12, 15, 6},  {13, 14, 6}};
    for (const auto& r : rows) {
        s[static_cast<std::size_t>(r[0])] = r[2];
        s[static_cast<std::size_t>(r[1])] = r[2];
    }
    return s;
}

std::string_view random_crib_cipher() { return "MVHWUSXOWBVMMK"; }
std::string_view true_crib_cipher() { return "NYXLNXIQHH"; }
std::string_view crib_word() { return "AMBASSADOR"; }
std::vector<int> random_crib_quoted_slides() { return {12, 9, 6, 22, 2, 0, 23, 11, 14}; }
std::vector<int> true_crib_quoted_slides() { return {13, 12, 22, 11, 21, 5, 8, 13, 19, 16}; }

std::string_view depth_first_message() { return "GFRLIKQGVBMILAFIXMMOROGBYSKYXDAZCHMUMRKBZLDLDDOHCMVTIPRSD"; }
std::string_view depth_second_message() { return "VLOVDYQCEJSOPYGBMBKYXDAZNBFIOPTFCXDOD"; }
std::string_view depth_figure() { return "XOOOOOOOOOOXOOXXOOXXXXXXOOOOOOOOOOXOX"; }

std::map<std::string, int> quoted_exclusive_scores() {
    return {{"SF", -7}, {"AA", -7}, {"TS", -2}, {"PT", -10}, {"TA", -3}, {"WU", -13}};
}

std::string_view transposition_cipher_as_printed() {
    return "SATPTWSFASTAUTEEAIEUFHWTJTDDGC"
           "NLTSEFCUIEBOEYQHGTJTEEFIEORTAR"
           "URNLNNNNAIEOTUSHLESBFBRNDXGNJH"
           "UANWR";
}

std::string_view transposition_cipher() {
    return "SATPTWSFASTAUTEEAIEUFHWTJTDDGC"
           "NITSEFCUIEBOEYQHGTJTEEFIEORTAR"
           "URNLNNNNAIEOTUSHLESBFBRNDXGNJH"
           "UANWR";
}

std::vector<int> transposition_key() { return {5, 11, 8, 7, 3, 10, 6, 12, 9, 4, 1, 2}; }

}  // namespace banbury::reference
