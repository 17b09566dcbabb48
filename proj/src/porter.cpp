#include "kexkit/porter.hpp"

#include <algorithm>
#include <cctype>

namespace kexkit {
namespace {

// State for one stemming pass. b holds the lowercased word, k is the index
// of its last letter, j marks the end of the stem a candidate suffix was
// matched against.
struct Stemmer {
    std::string b;
    int k = 0;
    int j = 0;

    bool cons(int i) const {
        switch (b[static_cast<size_t>(i)]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !cons(i - 1);
        default:
            return true;
        }
    }

    // Number of consonant-vowel sequences in b[0..j].
    int measure() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j) return n;
            if (!cons(i)) break;
            i++;
        }
        i++;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (cons(i)) break;
                i++;
            }
            i++;
            n++;
            while (true) {
                if (i > j) return n;
                if (!cons(i)) break;
                i++;
            }
            i++;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; i++)
            if (!cons(i)) return true;
        return false;
    }

    bool double_cons(int i) const {
        if (i < 1) return false;
        if (b[static_cast<size_t>(i)] != b[static_cast<size_t>(i - 1)]) return false;
        return cons(i);
    }

    // consonant-vowel-consonant ending at i, last consonant not w, x or y.
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char ch = b[static_cast<size_t>(i)];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        if (b.compare(static_cast<size_t>(k - len + 1), static_cast<size_t>(len), s) != 0)
            return false;
        j = k - len;
        return true;
    }

    void set_to(std::string_view s) {
        b.replace(static_cast<size_t>(j + 1), std::string::npos, s);
        k = j + static_cast<int>(s.size());
    }

    void replace_if_m(std::string_view s) {
        if (measure() > 0) set_to(s);
    }

    void step1ab() {
        if (b[static_cast<size_t>(k)] == 's') {
            if (ends("sses")) k -= 2;
            else if (ends("ies")) set_to("i");
            else if (b[static_cast<size_t>(k - 1)] != 's') k--;
        }
        if (ends("eed")) {
            if (measure() > 0) k--;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at")) set_to("ate");
            else if (ends("bl")) set_to("ble");
            else if (ends("iz")) set_to("ize");
            else if (double_cons(k)) {
                char ch = b[static_cast<size_t>(k)];
                if (ch != 'l' && ch != 's' && ch != 'z') k--;
            } else {
                j = k;
                if (measure() == 1 && cvc(k)) set_to("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b[static_cast<size_t>(k)] = 'i';
    }

    void step2() {
        if (k < 1) return;
        switch (b[static_cast<size_t>(k - 1)]) {
        case 'a':
            if (ends("ational")) { replace_if_m("ate"); break; }
            if (ends("tional")) { replace_if_m("tion"); break; }
            break;
        case 'c':
            if (ends("enci")) { replace_if_m("ence"); break; }
            if (ends("anci")) { replace_if_m("ance"); break; }
            break;
        case 'e':
            if (ends("izer")) { replace_if_m("ize"); break; }
            break;
        case 'l':
            if (ends("bli")) { replace_if_m("ble"); break; }
            if (ends("alli")) { replace_if_m("al"); break; }
            if (ends("entli")) { replace_if_m("ent"); break; }
            if (ends("eli")) { replace_if_m("e"); break; }
            if (ends("ousli")) { replace_if_m("ous"); break; }
            break;
        case 'o':
            if (ends("ization")) { replace_if_m("ize"); break; }
            if (ends("ation")) { replace_if_m("ate"); break; }
            if (ends("ator")) { replace_if_m("ate"); break; }
            break;
        case 's':
            if (ends("alism")) { replace_if_m("al"); break; }
            if (ends("iveness")) { replace_if_m("ive"); break; }
            if (ends("fulness")) { replace_if_m("ful"); break; }
            if (ends("ousness")) { replace_if_m("ous"); break; }
            break;
        case 't':
            if (ends("aliti")) { replace_if_m("al"); break; }
            if (ends("iviti")) { replace_if_m("ive"); break; }
            if (ends("biliti")) { replace_if_m("ble"); break; }
            break;
        case 'g':
            if (ends("logi")) { replace_if_m("log"); break; }
            break;
        default:
            break;
        }
    }

    void step3() {
        switch (b[static_cast<size_t>(k)]) {
        case 'e':
            if (ends("icate")) { replace_if_m("ic"); break; }
            if (ends("ative")) { replace_if_m(""); break; }
            if (ends("alize")) { replace_if_m("al"); break; }
            break;
        case 'i':
            if (ends("iciti")) { replace_if_m("ic"); break; }
            break;
        case 'l':
            if (ends("ical")) { replace_if_m("ic"); break; }
            if (ends("ful")) { replace_if_m(""); break; }
            break;
        case 's':
            if (ends("ness")) { replace_if_m(""); break; }
            break;
        default:
            break;
        }
    }

    void step4() {
        if (k < 1) return;
        switch (b[static_cast<size_t>(k - 1)]) {
        case 'a':
            if (ends("al")) break;
            return;
        case 'c':
            if (ends("ance")) break;
            if (ends("ence")) break;
            return;
        case 'e':
            if (ends("er")) break;
            return;
        case 'i':
            if (ends("ic")) break;
            return;
        case 'l':
            if (ends("able")) break;
            if (ends("ible")) break;
            return;
        case 'n':
            if (ends("ant")) break;
            if (ends("ement")) break;
            if (ends("ment")) break;
            if (ends("ent")) break;
            return;
        case 'o':
            if (ends("ion") && j >= 0 &&
                (b[static_cast<size_t>(j)] == 's' || b[static_cast<size_t>(j)] == 't'))
                break;
            if (ends("ou")) break;
            return;
        case 's':
            if (ends("ism")) break;
            return;
        case 't':
            if (ends("ate")) break;
            if (ends("iti")) break;
            return;
        case 'u':
            if (ends("ous")) break;
            return;
        case 'v':
            if (ends("ive")) break;
            return;
        case 'z':
            if (ends("ize")) break;
            return;
        default:
            return;
        }
        if (measure() > 1) k = j;
    }

    void step5() {
        j = k;
        if (b[static_cast<size_t>(k)] == 'e') {
            int a = measure();
            if (a > 1 || (a == 1 && !cvc(k - 1))) k--;
        }
        if (b[static_cast<size_t>(k)] == 'l' && double_cons(k) && measure() > 1) k--;
    }
};

} // namespace

std::string porter_stem(std::string_view word) {
    std::string low;
    low.reserve(word.size());
    bool alpha = true;
    for (char c : word) {
        unsigned char uc = static_cast<unsigned char>(c);
        char lc = static_cast<char>(std::tolower(uc));
        if (lc < 'a' || lc > 'z') alpha = false;
        low.push_back(lc);
    }
    if (!alpha || low.size() <= 2) return low;

    Stemmer st;
    st.b = low;
    st.k = static_cast<int>(low.size()) - 1;
    st.step1ab();
    st.step1c();
    st.step2();
    st.step3();
    st.step4();
    st.step5();
    st.b.resize(static_cast<size_t>(st.k + 1));
    return st.b;
}

} // namespace kexkit
