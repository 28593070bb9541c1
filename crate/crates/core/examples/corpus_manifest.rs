use morita::corpus::*;

fn main() {
    let corpus = builtin_corpus();
    let entries = manifest(&corpus, 0);
    let positive = entries.iter().filter(|e| e.expected).count();
    println!(
        "{} semigroups, {} pairs, {positive} equivalent",
        corpus.len(),
        entries.len()
    );
    print!("{}", write_manifest(&entries[..12]));
}
