//! The canonical Arabic character inventory used to standardize every
//! source, plus classification of arbitrary code points against it.
//!
//! The compiled-in table covers 44 graphemes: 36 letters (consonants,
//! the three long vowels alif/waw/ya, and the five hamza forms) and the
//! 8 combining marks (fathah, kasra, damma, the three tanwin marks,
//! tashdeed and sakun). Each entry carries an Arpabet code as metadata;
//! no phonetic conversion is performed here.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use unicode_properties::{EmojiStatus, UnicodeEmoji};

use crate::config::CleanConfig;
use crate::error::{Error, Result};

/// Version tag for the compiled-in table, reported by `--version` and
/// embedded in run reports.
pub const CHARSET_VERSION: &str = "v1";

/// Classification of a Unicode scalar under a cleaning policy.
///
/// Every scalar maps to exactly one class. `MaskTagChar` is only
/// produced by context-aware scans ([`classify_chars`]) for scalars
/// inside a recognized mask-tag literal; the scalar-level [`classify`]
/// maps those same characters to `Noisy` because, standing alone, they
/// are outside the inventory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharClass {
    Consonant,
    LongVowel,
    ShortVowel,
    DiacriticalMark,
    HamzaForm,
    ArabicPunct,
    AsciiDigit,
    Whitespace,
    Emoji,
    MaskTagChar,
    Noisy,
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CharClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Consonant" => Ok(CharClass::Consonant),
            "LongVowel" => Ok(CharClass::LongVowel),
            "ShortVowel" => Ok(CharClass::ShortVowel),
            "DiacriticalMark" => Ok(CharClass::DiacriticalMark),
            "HamzaForm" => Ok(CharClass::HamzaForm),
            other => Err(Error::BadOverride(format!(
                "unknown character class {other:?} (expected Consonant, LongVowel, \
                 ShortVowel, DiacriticalMark or HamzaForm)"
            ))),
        }
    }
}

/// One row of the character table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharsetEntry {
    pub grapheme: char,
    /// Arpabet code, verbatim from the table; `None` for tashdeed and
    /// sakun, which carry no phonetic value. Multi-valued cells such as
    /// "AE/E" are stored as-is.
    pub arpabet: Option<String>,
    pub description: String,
    pub class: CharClass,
}

/// The immutable character inventory. Safe to share across threads.
#[derive(Debug, Clone)]
pub struct CharsetTable {
    entries: Vec<CharsetEntry>,
    lookup: HashMap<char, usize>,
}

/// (grapheme, arpabet or "-", description, class) rows of the default table.
///
/// The source table prints the waw/alef/ya hamza carriers twice with
/// identical values; the duplicates collapse to one entry each.
const DEFAULT_ROWS: &[(char, &str, &str, CharClass)] = &[
    ('\u{0621}', "E", "hamza", CharClass::HamzaForm),
    ('\u{0627}', "AE/E", "alif", CharClass::LongVowel),
    ('\u{0622}', "AE:", "alif maddah", CharClass::Consonant),
    ('\u{0623}', "E", "alef + hamza above", CharClass::HamzaForm),
    ('\u{0624}', "E", "waw + hamza above", CharClass::HamzaForm),
    ('\u{0625}', "E", "alef + hamza below", CharClass::HamzaForm),
    ('\u{0626}', "E", "ya + hamza above", CharClass::HamzaForm),
    ('\u{0628}', "B", "ba", CharClass::Consonant),
    ('\u{0629}', "T/H", "ta marbuta", CharClass::Consonant),
    ('\u{062A}', "T/H", "ta", CharClass::Consonant),
    ('\u{062B}', "TH", "tha", CharClass::Consonant),
    ('\u{062C}', "ZH", "jeem", CharClass::Consonant),
    ('\u{062D}', "HH", "ha", CharClass::Consonant),
    ('\u{062E}', "KH", "kha", CharClass::Consonant),
    ('\u{062F}', "D", "dal", CharClass::Consonant),
    ('\u{0630}', "DH", "thal", CharClass::Consonant),
    ('\u{0631}', "R", "ra", CharClass::Consonant),
    ('\u{0632}', "ZH", "zay", CharClass::Consonant),
    ('\u{0633}', "S", "seen", CharClass::Consonant),
    ('\u{0634}', "SH", "sheen", CharClass::Consonant),
    ('\u{0635}', "SS", "sad", CharClass::Consonant),
    ('\u{0636}', "DD", "dad", CharClass::Consonant),
    ('\u{0637}', "TT", "ta (emphatic)", CharClass::Consonant),
    ('\u{0638}', "DH2", "za", CharClass::Consonant),
    ('\u{0639}', "AI", "ayn", CharClass::Consonant),
    ('\u{063A}', "GH", "ghayn", CharClass::Consonant),
    ('\u{0641}', "F", "fa", CharClass::Consonant),
    ('\u{0642}', "Q", "qaf", CharClass::Consonant),
    ('\u{0643}', "KH", "kaf", CharClass::Consonant),
    ('\u{0644}', "L", "lam", CharClass::Consonant),
    ('\u{0645}', "M", "meem", CharClass::Consonant),
    ('\u{0646}', "N", "noon", CharClass::Consonant),
    ('\u{0647}', "HH", "ha (final)", CharClass::Consonant),
    ('\u{0648}', "W", "waw", CharClass::LongVowel),
    ('\u{0649}', "AE", "alif maksura", CharClass::Consonant),
    ('\u{064A}', "Y", "ya", CharClass::LongVowel),
    ('\u{064E}', "AE", "fathah", CharClass::ShortVowel),
    ('\u{0650}', "IH", "kasra", CharClass::ShortVowel),
    ('\u{064F}', "UH", "damma", CharClass::ShortVowel),
    ('\u{064B}', "AE N", "fathathan", CharClass::DiacriticalMark),
    ('\u{064D}', "IH N", "kasrathan", CharClass::DiacriticalMark),
    ('\u{064C}', "UH N", "dammathan", CharClass::DiacriticalMark),
    ('\u{0651}', "-", "tashdeed", CharClass::DiacriticalMark),
    ('\u{0652}', "-", "sakun", CharClass::DiacriticalMark),
];

/// Builds the compiled-in character table.
pub fn build_default_charset() -> CharsetTable {
    let entries: Vec<CharsetEntry> = DEFAULT_ROWS
        .iter()
        .map(|&(grapheme, arpabet, description, class)| CharsetEntry {
            grapheme,
            arpabet: if arpabet == "-" {
                None
            } else {
                Some(arpabet.to_string())
            },
            description: description.to_string(),
            class,
        })
        .collect();
    CharsetTable::from_entries(entries).expect("default table is well-formed")
}

impl CharsetTable {
    fn from_entries(entries: Vec<CharsetEntry>) -> Result<Self> {
        let mut lookup = HashMap::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            if lookup.insert(e.grapheme, i).is_some() {
                return Err(Error::BadOverride(format!(
                    "duplicate grapheme {:?}",
                    e.grapheme
                )));
            }
        }
        Ok(CharsetTable { entries, lookup })
    }

    /// Parses an override table. One record per line:
    /// `grapheme TAB arpabet TAB class`, where arpabet "-" means none and
    /// class is one of the five letter/mark class names. Blank lines and
    /// lines starting with '#' are ignored.
    pub fn parse_override(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split('\t');
            let (g, a, c) = match (fields.next(), fields.next(), fields.next()) {
                (Some(g), Some(a), Some(c)) => (g, a, c),
                _ => {
                    return Err(Error::BadOverride(format!(
                        "line {}: expected grapheme<TAB>arpabet<TAB>class",
                        lineno + 1
                    )))
                }
            };
            let mut chars = g.chars();
            let grapheme = match (chars.next(), chars.next()) {
                (Some(ch), None) => ch,
                _ => {
                    return Err(Error::BadOverride(format!(
                        "line {}: grapheme must be a single scalar, got {g:?}",
                        lineno + 1
                    )))
                }
            };
            let class: CharClass = c.trim().parse()?;
            let arpabet = match a.trim() {
                "-" | "" => None,
                other => Some(other.to_string()),
            };
            entries.push(CharsetEntry {
                grapheme,
                arpabet,
                description: String::new(),
                class,
            });
        }
        if entries.is_empty() {
            return Err(Error::BadOverride("override table is empty".into()));
        }
        Self::from_entries(entries)
    }

    pub fn entries(&self) -> &[CharsetEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Looks up a scalar in the table.
    pub fn lookup(&self, ch: char) -> Option<&CharsetEntry> {
        self.lookup.get(&ch).map(|&i| &self.entries[i])
    }

    /// The Arpabet code of a table member. Absent for non-members and
    /// for tashdeed/sakun.
    pub fn arpabet_of(&self, ch: char) -> Option<&str> {
        self.lookup(ch).and_then(|e| e.arpabet.as_deref())
    }

    /// Classifies a single scalar under `cfg`. Total: every scalar gets
    /// exactly one class. Precedence: table member, kept punctuation,
    /// ASCII digit, whitespace, emoji (when preserved), otherwise Noisy.
    pub fn classify(&self, ch: char, cfg: &CleanConfig) -> CharClass {
        if let Some(e) = self.lookup(ch) {
            return e.class;
        }
        if cfg.kept_punct.contains(&ch) {
            return CharClass::ArabicPunct;
        }
        if ch.is_ascii_digit() {
            return CharClass::AsciiDigit;
        }
        if ch.is_whitespace() {
            return CharClass::Whitespace;
        }
        if cfg.preserve_emoji && is_emoji(ch) {
            return CharClass::Emoji;
        }
        CharClass::Noisy
    }
}

/// True for scalars rendered as emoji by default (the Emoji_Presentation
/// property of the Unicode emoji data bundled with the `unicode-properties`
/// crate). Text-default pictographs like U+00A9 and bare components such
/// as ZWJ or variation selectors are not included, so joined sequences
/// survive only as their presentation-emoji parts.
pub fn is_emoji(ch: char) -> bool {
    matches!(
        ch.emoji_status(),
        EmojiStatus::EmojiPresentation
            | EmojiStatus::EmojiPresentationAndModifierBase
            | EmojiStatus::EmojiPresentationAndEmojiComponent
            | EmojiStatus::EmojiPresentationAndModifierAndEmojiComponent
    )
}

/// Context-aware classification of a whole text: scalars inside a
/// recognized mask-tag literal (from `cfg.mask`) classify as
/// `MaskTagChar`; everything else falls back to [`CharsetTable::classify`].
/// Yields `(byte_offset, scalar, class)`.
pub fn classify_chars<'a>(
    text: &'a str,
    table: &'a CharsetTable,
    cfg: &'a CleanConfig,
) -> ClassifiedChars<'a> {
    ClassifiedChars {
        text,
        table,
        cfg,
        pos: 0,
        tag_end: 0,
    }
}

pub struct ClassifiedChars<'a> {
    text: &'a str,
    table: &'a CharsetTable,
    cfg: &'a CleanConfig,
    pos: usize,
    tag_end: usize,
}

impl Iterator for ClassifiedChars<'_> {
    type Item = (usize, char, CharClass);

    fn next(&mut self) -> Option<Self::Item> {
        let rest = &self.text[self.pos..];
        let ch = rest.chars().next()?;
        let at = self.pos;
        if self.pos >= self.tag_end {
            if let Some(tag) = self.cfg.mask.tag_at(rest) {
                self.tag_end = self.pos + tag.len();
            }
        }
        let class = if self.pos < self.tag_end {
            CharClass::MaskTagChar
        } else {
            self.table.classify(ch, self.cfg)
        };
        self.pos += ch.len_utf8();
        Some((at, ch, class))
    }
}

/// Scans `text` and returns the byte offset and value of every scalar
/// that classifies as Noisy (mask-tag literals excluded).
pub fn scan_noisy(text: &str, table: &CharsetTable, cfg: &CleanConfig) -> Vec<(usize, char)> {
    classify_chars(text, table, cfg)
        .filter(|&(_, _, class)| class == CharClass::Noisy)
        .map(|(at, ch, _)| (at, ch))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> CharsetTable {
        build_default_charset()
    }

    fn cfg() -> CleanConfig {
        CleanConfig::default()
    }

    #[test]
    fn default_table_has_44_distinct_graphemes() {
        assert_eq!(table().len(), 44);
    }

    #[test]
    fn alif_maddah_and_fathah_arpabet() {
        let t = table();
        assert_eq!(t.arpabet_of('\u{0622}'), Some("AE:"));
        assert_eq!(t.arpabet_of('\u{064E}'), Some("AE"));
    }

    #[test]
    fn latin_is_not_a_member() {
        assert!(table().lookup('z').is_none());
        assert_eq!(table().arpabet_of('Q'), None);
    }

    #[test]
    fn kha_arpabet() {
        assert_eq!(table().arpabet_of('خ'), Some("KH"));
    }

    #[test]
    fn tashdeed_and_sakun_have_no_arpabet() {
        let t = table();
        assert_eq!(t.arpabet_of('\u{0651}'), None);
        assert_eq!(t.arpabet_of('\u{0652}'), None);
        assert!(t.lookup('\u{0651}').is_some());
        assert!(t.lookup('\u{0652}').is_some());
    }

    #[test]
    fn classify_examples() {
        let t = table();
        let c = cfg();
        assert_eq!(t.classify('ب', &c), CharClass::Consonant);
        assert_eq!(t.classify('7', &c), CharClass::AsciiDigit);
        assert_eq!(t.classify('©', &c), CharClass::Noisy);
        assert_eq!(t.classify('؟', &c), CharClass::ArabicPunct);
        assert_eq!(t.classify(' ', &c), CharClass::Whitespace);
        assert_eq!(t.classify('😀', &c), CharClass::Emoji);
    }

    #[test]
    fn emoji_respects_policy() {
        let t = table();
        let mut c = cfg();
        assert_eq!(t.classify('😀', &c), CharClass::Emoji);
        c.preserve_emoji = false;
        assert_eq!(t.classify('😀', &c), CharClass::Noisy);
    }

    #[test]
    fn tatweel_is_noisy_by_default() {
        assert_eq!(table().classify('\u{0640}', &cfg()), CharClass::Noisy);
    }

    #[test]
    fn combining_marks_cover_exactly_the_eight() {
        let marks: Vec<char> = table()
            .entries()
            .iter()
            .filter(|e| {
                e.class == CharClass::ShortVowel || e.class == CharClass::DiacriticalMark
            })
            .map(|e| e.grapheme)
            .collect();
        assert_eq!(marks.len(), 8);
        for m in ['\u{064B}', '\u{064C}', '\u{064D}', '\u{064E}', '\u{064F}', '\u{0650}',
                  '\u{0651}', '\u{0652}'] {
            assert!(marks.contains(&m), "missing mark U+{:04X}", m as u32);
        }
    }

    #[test]
    fn letter_rows_count() {
        let letters = table()
            .entries()
            .iter()
            .filter(|e| {
                matches!(
                    e.class,
                    CharClass::Consonant | CharClass::LongVowel | CharClass::HamzaForm
                )
            })
            .count();
        assert_eq!(letters, 36);
    }

    #[test]
    fn classify_is_total_over_all_scalars() {
        let t = table();
        let c = cfg();
        let mut count: u64 = 0;
        for cp in 0u32..=0x10FFFF {
            if let Some(ch) = char::from_u32(cp) {
                let _ = t.classify(ch, &c);
                count += 1;
            }
        }
        assert_eq!(count, 1_112_064);
    }

    #[test]
    fn closure_no_member_is_noisy() {
        let t = table();
        let c = cfg();
        for e in t.entries() {
            assert_ne!(t.classify(e.grapheme, &c), CharClass::Noisy, "{:?}", e.grapheme);
        }
    }

    #[test]
    fn classify_chars_marks_tag_literals() {
        let t = table();
        let c = cfg();
        let classes: Vec<CharClass> = classify_chars("ب[link]ب", &t, &c)
            .map(|(_, _, class)| class)
            .collect();
        assert_eq!(classes[0], CharClass::Consonant);
        assert!(classes[1..7].iter().all(|&x| x == CharClass::MaskTagChar));
        assert_eq!(classes[7], CharClass::Consonant);
        // Bare scalar classification of tag characters stays Noisy.
        assert_eq!(t.classify('[', &c), CharClass::Noisy);
        assert_eq!(t.classify('l', &c), CharClass::Noisy);
    }

    #[test]
    fn scan_noisy_reports_offsets() {
        let t = table();
        let c = cfg();
        let hits = scan_noisy("مرحبا © بكم", &t, &c);
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].1, '©');
        assert!(scan_noisy("انظر [link] هنا", &t, &c).is_empty());
    }

    #[test]
    fn override_table_parses() {
        let t = CharsetTable::parse_override("ب\tB\tConsonant\nا\tAE/E\tLongVowel\n").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.arpabet_of('ا'), Some("AE/E"));
    }

    #[test]
    fn override_rejects_duplicates_and_bad_classes() {
        assert!(CharsetTable::parse_override("ب\tB\tConsonant\nب\tB\tConsonant\n").is_err());
        assert!(CharsetTable::parse_override("ب\tB\tVerb\n").is_err());
        assert!(CharsetTable::parse_override("با\tB\tConsonant\n").is_err());
    }
}
