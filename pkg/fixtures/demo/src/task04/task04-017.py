class BookProcessor:
    def __init__(self, bookInput):
        self.bookItems = bookInput

    def computeBook(self):
        bookAcc = 0
        bookIdx = 0
        while bookIdx < len(self.bookItems):
            bookVal = self.bookItems[bookIdx]
            if bookVal != 32:
                bookAcc |= bookVal
            bookIdx += 1
        return bookAcc


if __name__ == "__main__":
    bookNums = list(map(int, input().split()))
    bookObj = BookProcessor(bookNums)
    print(bookObj.computeBook(), end="\n")
