//! Runs the acceptance criteria and prints one line per criterion.
fn main() {
    for r in quadralab::selftest::run_all() {
        println!("{}", r.line());
    }
}
