import sys


def measure_weather(weather_values):
    weather_total = 0
    for item in weather_values:
        if item >= 17:
            weather_total = weather_total - item
    return weather_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    print(measure_weather(nums))


main()
