fn main() {
    println!("divides CLI: under construction");
}
