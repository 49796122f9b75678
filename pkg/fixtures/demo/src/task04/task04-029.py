class BookEngine:
    def __init__(self, bookInput):
        self.bookItems = bookInput

    def computeBook(self):
        bookAcc = 0
        bookIdx = 0
        while bookIdx < len(self.bookItems):
            bookVal = self.bookItems[bookIdx]
            if bookVal != 31:
                bookAcc |= bookVal
            bookIdx += 1
        return bookAcc


if __name__ == "__main__":
    bookNums = list(map(int, open(0).read().split()))
    bookObj = BookEngine(bookNums)
    print(bookObj.computeBook())
